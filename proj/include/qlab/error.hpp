#ifndef QLAB_ERROR_HPP
#define QLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qlab {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// series arithmetic
struct empty_series_error : error {
    explicit empty_series_error(const std::string& w = "operation requires a nonzero leading term") : error(w) {}
};
struct odd_lead_exponent_error : error {
    explicit odd_lead_exponent_error(const std::string& w = "sqrt: leading exponent is off the half-lattice") : error(w) {}
};
struct non_square_lead_error : error {
    explicit non_square_lead_error(const std::string& w = "sqrt: leading coefficient is not a rational square") : error(w) {}
};
struct non_integer_exponent_error : error {
    explicit non_integer_exponent_error(const std::string& w = "substitution needs integer exponents") : error(w) {}
};
struct beyond_truncation_error : error {
    explicit beyond_truncation_error(const std::string& w = "coefficient query at or past the truncation order") : error(w) {}
};

// catalog / verifier
struct unknown_id_error : error {
    explicit unknown_id_error(const std::string& id) : error("unknown catalog id: " + id) {}
};
struct wrong_mode_error : error {
    explicit wrong_mode_error(const std::string& w) : error(w) {}
};
struct unbound_symbol_error : error {
    explicit unbound_symbol_error(const std::string& s) : error("unbound symbol: " + s) {}
};
struct unresolved_signs_error : error {
    explicit unresolved_signs_error(const std::string& w = "identity has unresolved sign slots") : error(w) {}
};
struct no_sign_slots_error : error {
    explicit no_sign_slots_error(const std::string& w = "identity has no sign slots") : error(w) {}
};

// numeric evaluation
struct domain_error : error {
    explicit domain_error(const std::string& w) : error(w) {}
};
struct negative_radicand_error : error {
    explicit negative_radicand_error(const std::string& w = "even root of a negative value") : error(w) {}
};
struct tail_bound_error : error {
    explicit tail_bound_error(const std::string& w = "truncation tail bound too large at this point") : error(w) {}
};

} // namespace qlab

#endif
