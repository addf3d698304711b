#pragma once

#include <string>

#include "g2l/report.hpp"

// Known discrepancies in the source formulas, each with the computational
// resolution this library applies. Suites attach the entries they confirm.
namespace g2l::errata {

TypoEntry bilinear_form_shape();
TypoEntry norm_formula();
TypoEntry traceless_matrix_size();
TypoEntry case1_compact_factor();
TypoEntry case2_blank_factors();
TypoEntry frobenius_minus_eigenspace();
TypoEntry dual_group_conjugacy_class();
TypoEntry nonsplit_exponent_case();
TypoEntry modulus_exponent_sign();
TypoEntry inner_integral_domain();
/// `winner` is the zeta triple the end-to-end comparison selects.
TypoEntry zeta_triple(const std::string& winner);

}  // namespace g2l::errata
