#include <polyasym/approx_value.hpp>

#include <array>
#include <utility>

namespace polyasym
{

namespace
{

constexpr std::array<std::pair<Method, std::string_view>, 9> method_names{{
    {Method::Oracle, "oracle"},
    {Method::FiniteSum, "finite-sum"},
    {Method::NegIntLeading, "leading"},
    {Method::Saddle, "saddle"},
    {Method::Fourier, "fourier"},
    {Method::FourierLeading, "fourier-leading"},
    {Method::Watson, "watson"},
    {Method::TwoPoint, "twopoint"},
    {Method::TwoPointTilde, "twopoint-tilde"},
}};

} // namespace

std::string_view method_name(Method m)
{
    for (const auto &[k, v] : method_names) {
        if (k == m) {
            return v;
        }
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name)
{
    for (const auto &[k, v] : method_names) {
        if (v == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view confidence_name(Confidence c)
{
    switch (c) {
    case Confidence::Asymptotic:
        return "asymptotic";
    case Confidence::Convergent:
        return "convergent";
    case Confidence::Exact:
        return "exact";
    }
    return "unknown";
}

std::string_view error_kind_name(ErrorKind k)
{
    return k == ErrorKind::Absolute ? "absolute" : "relative";
}

HPReal ApproxValue::absolute_error_estimate() const
{
    if (error_kind == ErrorKind::Absolute) {
        return error_estimate;
    }
    return error_estimate * abs(value);
}

} // namespace polyasym
