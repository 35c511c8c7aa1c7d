#ifndef POLYASYM_APPROX_VALUE_HPP
#define POLYASYM_APPROX_VALUE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include <polyasym/hp_complex.hpp>

namespace polyasym
{

enum class Method
{
    Oracle,
    FiniteSum,
    NegIntLeading,
    Saddle,
    Fourier,
    FourierLeading,
    Watson,
    TwoPoint,
    TwoPointTilde
};

enum class Confidence
{
    Asymptotic,
    Convergent,
    Exact
};

// Whether error_estimate bounds |value - exact| or |value - exact| / |exact|.
enum class ErrorKind
{
    Absolute,
    Relative
};

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);
std::string_view confidence_name(Confidence c);
std::string_view error_kind_name(ErrorKind k);

struct ApproxValue
{
    HPComplex value;
    Method method = Method::Oracle;
    std::size_t terms_used = 0;
    HPReal error_estimate;
    ErrorKind error_kind = ErrorKind::Absolute;
    Confidence confidence = Confidence::Asymptotic;
    // Set when a precondition of the estimate is only marginally met
    // (e.g. a saddle point that is not far into the right half-plane).
    bool low_confidence = false;

    // The estimate expressed as an absolute error.
    HPReal absolute_error_estimate() const;
};

} // namespace polyasym

#endif
