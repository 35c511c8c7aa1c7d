#ifndef POLYASYM_ERRORS_HPP
#define POLYASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyasym
{

// A precondition of a mathematical routine is violated (wrong parameter
// domain, undefined quantity, unsupported method/parameter combination).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace polyasym

#endif
