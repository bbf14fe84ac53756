#include "core/mining.hpp"

namespace saacbr {

const char* to_string(Mode m) {
    return m == Mode::Aacbr ? "aacbr" : "saacbr";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "aacbr") return Mode::Aacbr;
    if (text == "saacbr") return Mode::Saacbr;
    return std::nullopt;
}

} // namespace saacbr
