#include "qmono/bitstring.hpp"

#include "qmono/errors.hpp"

namespace qmono {

BitString::BitString(std::string_view text) : bits_(text) {
    for (char c : bits_) {
        if (c != '0' && c != '1') {
            throw InvalidInput("bit string contains a character other than '0'/'1': \"" +
                               std::string(text) + "\"");
        }
    }
}

} // namespace qmono
