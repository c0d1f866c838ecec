#include "cipherclimb/text_codec.hpp"

#include <stdexcept>

namespace cipherclimb {

std::string normalize(std::string_view raw)
{
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (c >= 'A' && c <= 'Z') {
            out.push_back(static_cast<char>(c - 'A' + 'a'));
        } else if (Alphabet::contains(c)) {
            out.push_back(c);
        }
    }
    return out;
}

MappedText map_text(std::string_view text)
{
    MappedText out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!Alphabet::contains(c)) {
            throw std::invalid_argument("map_text: character at offset " + std::to_string(i) +
                                        " is not a lowercase letter (normalize the text first)");
        }
        out.push_back(static_cast<Letter>(c - 'a'));
    }
    return out;
}

std::string demap(const MappedText& text)
{
    std::string out;
    out.reserve(text.size());
    for (Letter l : text) {
        out.push_back(Alphabet::letter(l));
    }
    return out;
}

}  // namespace cipherclimb
