#ifndef SEMIHOM_ERRORS_HPP
#define SEMIHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semihom {

// Every failure mode raised by the library carries one of these codes so
// callers (and the CLI) can turn it into a failed assertion instead of a crash.
enum class Errc {
    config,
    not_prime,
    shape_mismatch,
    differential_square_nonzero,
    singular,
    not_inverse_monoid,
    not_commutative,
    enumeration_cap_exceeded,
    size_cap_exceeded,
    not_surjective,
    not_semilattice,
    tmodule_axiom_violation,
    degree_out_of_range,
    not_finite_field,
    unbounded_tensor,
    object_outside_window,
    invalid_table,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline void check(bool ok, Errc code, const std::string& msg) {
    if (!ok) throw Error(code, msg);
}

} // namespace semihom

#endif
