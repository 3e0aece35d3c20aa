#pragma once

// The "Index of distributions" appendix, one row per listed name, with the
// canonical catalog entry it should resolve to. "extreme value type N" and
// "Gumbel type N" are expanded for N = I, II, III.

#include <string_view>
#include <utility>

namespace appendix {

inline constexpr std::pair<std::string_view, std::string_view> kIndex[] = {
    {"χ", "chi"},
    {"χ²", "chi-square"},
    {"Γ", "gamma"},
    {"Λ", "log-normal"},
    {"Φ", "normal"},
    {"antilog-normal", "log-normal"},
    {"Amaroso", "Amoroso"},
    {"bell curve", "normal"},
    {"BHP", "BHP"},
    {"Bramwell-Holdsworth-Pinton", "BHP"},
    {"chi", "chi"},
    {"chi-square", "chi-square"},
    {"Coale-McNeil", "log-gamma"},
    {"Cobb-Douglas", "log-normal"},
    {"de Moivre", "normal"},
    {"degenerate", "normal"},
    {"delta", "normal"},
    {"doubly exponential", "Gumbel"},
    {"double exponential", "Gumbel"},
    {"Erlang", "Erlang"},
    {"error", "normal"},
    {"error function", "normal"},
    {"exponential", "exponential"},
    {"extreme value", "Gumbel"},
    {"extreme value type I", "Gumbel"},
    {"extreme value type II", "Fréchet"},
    {"extreme value type III", "Weibull"},
    {"Fisher-Tippett", "Fisher-Tippett"},
    {"Fisher-Tippett type I", "Gumbel"},
    {"Fisher-Tippett type II", "Fréchet"},
    {"Fisher-Tippett type III", "Weibull"},
    {"Fisher-Tippett-Gumbel", "Gumbel"},
    {"fractal", "power law"},
    {"flat", "normal"},
    {"Fréchet", "Fréchet"},
    {"FTG", "Gumbel"},
    {"Galton", "log-normal"},
    {"Galton-McAlister", "log-normal"},
    {"gamma", "gamma"},
    {"Gaussian", "normal"},
    {"Gauss", "normal"},
    {"generalized gamma", "Stacy"},
    {"generalized inverse gamma", "Stacy"},
    {"generalized Gumbel", "generalized Gumbel"},
    {"generalized extreme value", "Fisher-Tippett"},
    {"generalized Fisher-Tippett", "generalized Fisher-Tippett"},
    {"generalized Fréchet", "generalized Fréchet"},
    {"generalized normal", "Nakagami"},
    {"generalized Rayleigh", "scaled chi"},
    {"generalized semi-normal", "Stacy"},
    {"generalized Weibull", "generalized Weibull"},
    {"GEV", "Fisher-Tippett"},
    {"Gibrat", "log-normal"},
    {"Gumbel", "Gumbel"},
    {"Gumbel-Fisher-Tippett", "Gumbel"},
    {"Gumbel type I", "Gumbel"},
    {"Gumbel type II", "Fréchet"},
    {"Gumbel type III", "Weibull"},
    {"half-normal", "half-normal"},
    {"half-uniform", "power law"},
    {"hydrograph", "Stacy"},
    {"hyper gamma", "Stacy"},
    {"inverse chi", "inverse chi"},
    {"inverse chi-square", "inverse chi-square"},
    {"inverse exponential", "inverse exponential"},
    {"inverse gamma", "inverse gamma"},
    {"inverse Rayleigh", "inverse Rayleigh"},
    {"inverse Weibull", "Fréchet"},
    {"Jeffreys", "power law"},
    {"Laplace's second law of error", "normal"},
    {"Laplace-Gauss", "normal"},
    {"law of error", "normal"},
    {"Leonard hydrograph", "Stacy"},
    {"Lévy", "Lévy"},
    {"log-chi-square", "log-chi-square"},
    {"log-gamma", "log-gamma"},
    {"log-normal", "log-normal"},
    {"log-normal, two parameter", "log-normal"},
    {"log-Weibull", "Gumbel"},
    {"logarithmic-normal", "log-normal"},
    {"logarithmico-normal", "log-normal"},
    {"Maxwell", "Maxwell"},
    {"Maxwell-Boltzmann", "Maxwell"},
    {"Maxwell speed", "Maxwell"},
    {"m-Erlang", "Erlang"},
    {"Nakagami", "Nakagami"},
    {"Nakagami-m", "Nakagami"},
    {"negative exponential", "exponential"},
    {"normal", "normal"},
    {"Nukiyama-Tanasawa", "Stacy"},
    {"one-sided normal", "half-normal"},
    {"Pearson type III", "Pearson type III"},
    {"Pearson type V", "Pearson type V"},
    {"Pearson type X", "exponential"},
    {"Pearson type XI", "power law"},
    {"positive definite normal", "half-normal"},
    {"power law", "power law"},
    {"pseudo-Weibull", "pseudo-Weibull"},
    {"Rayleigh", "Rayleigh"},
    {"Rosin-Rammler", "Weibull"},
    {"Rosin-Rammler-Weibull", "Weibull"},
    {"scaled chi", "scaled chi"},
    {"scaled chi-square", "scaled chi-square"},
    {"scaled inverse chi", "scaled inverse chi"},
    {"scaled inverse chi-square", "scaled inverse chi-square"},
    {"semi-normal", "half-normal"},
    {"shifted exponential", "shifted exponential"},
    {"Stacy", "Stacy"},
    {"Stacy-Mihram", "Amoroso"},
    {"standard Amoroso", "standard gamma"},
    {"standard exponential", "standard exponential"},
    {"standard gamma", "standard gamma"},
    {"standard Gumbel", "standard Gumbel"},
    {"standard log-gamma", "standard log-gamma"},
    {"standard log-normal", "log-normal"},
    {"standard normal", "normal"},
    {"stretched exponential", "stretched exponential"},
    {"transformed gamma", "Stacy"},
    {"uniform", "normal"},
    {"unit normal", "normal"},
    {"van der Waals profile", "Lévy"},
    {"Vienna", "Wien"},
    {"Vinci", "inverse gamma"},
    {"von Mises extreme value", "Fisher-Tippett"},
    {"von Mises-Jenkinson", "Fisher-Tippett"},
    {"waiting time", "exponential"},
    {"Weibull", "Weibull"},
    {"Weibull-Gnedenko", "Weibull"},
    {"Wien", "Wien"},
    {"Wilson-Hilferty", "Wilson-Hilferty"},
    {"z", "normal"},
};

}  // namespace appendix
