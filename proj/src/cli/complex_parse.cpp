#include <polyasym/cli/complex_parse.hpp>

#include <cctype>
#include <charconv>

namespace polyasym::cli
{

namespace
{

Rational parse_part(std::string_view s, std::string_view whole)
{
    try {
        return Rational::parse(s);
    } catch (const std::exception &) {
        throw usage_error("malformed number '" + std::string(whole) + "'");
    }
}

long parse_long(std::string_view s, std::string_view whole)
{
    s = trim(s);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw usage_error("malformed integer '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<long> ComplexRational::as_integer() const
{
    if (!is_real() || !re.is_integer()) {
        return std::nullopt;
    }
    return re.to_long();
}

HPComplex ComplexRational::to_hp(mpfr_prec_t prec) const
{
    return HPComplex(re, im, prec);
}

std::string ComplexRational::to_string() const
{
    if (im.is_zero()) {
        return re.to_string();
    }
    std::string out;
    if (!re.is_zero()) {
        out = re.to_string();
        if (im.sign() > 0) {
            out += '+';
        }
    }
    return out + im.to_string() + "i";
}

ComplexRational parse_complex(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw usage_error("empty complex number");
    }
    if (s.back() != 'i') {
        return {parse_part(s, text), Rational(0)};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // The split point is the last sign that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_text;
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        re_text = body.substr(0, split);
        im_text = body.substr(split);
    }
    Rational im;
    if (im_text.empty() || im_text == "+") {
        im = Rational(1);
    } else if (im_text == "-") {
        im = Rational(-1);
    } else {
        im = parse_part(im_text, text);
    }
    const Rational re = re_text.empty() ? Rational(0) : parse_part(re_text, text);
    return {re, im};
}

std::vector<long> parse_n_range(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto c1 = s.find(':');
    if (c1 == std::string_view::npos) {
        return {parse_long(s, text)};
    }
    const auto c2 = s.find(':', c1 + 1);
    const long a = parse_long(s.substr(0, c1), text);
    const long b = parse_long(s.substr(c1 + 1, c2 == std::string_view::npos ? c2 : c2 - c1 - 1), text);
    const long step = c2 == std::string_view::npos ? 1 : parse_long(s.substr(c2 + 1), text);
    if (step <= 0) {
        throw usage_error("range step must be positive in '" + std::string(text) + "'");
    }
    if (b < a) {
        throw usage_error("empty range '" + std::string(text) + "'");
    }
    std::vector<long> out;
    for (long n = a; n <= b; n += step) {
        out.push_back(n);
    }
    return out;
}

std::vector<long> parse_n_list(std::string_view text)
{
    std::vector<long> out;
    for (const auto &item : split_list(text)) {
        const auto part = parse_n_range(item);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out;
    if (trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (item.empty()) {
            throw usage_error("empty item in list '" + std::string(text) + "'");
        }
        out.emplace_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace polyasym::cli
