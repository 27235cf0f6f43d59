#include "qdb/label.hpp"

namespace qdb {

std::uint64_t label_space_size(int letters) {
    if (letters < 0 || letters > 31)
        throw IndexError("letter count out of range: " + std::to_string(letters));
    return std::uint64_t{1} << (2 * letters);
}

Label::Label(int letters, std::uint64_t index) : letters_(letters), index_(index) {
    if (index >= label_space_size(letters))
        throw IndexError("label " + std::to_string(index) + " out of range for " +
                         std::to_string(letters) + " letters");
}

Label Label::from_letters(const std::vector<Letter>& letters) {
    std::uint64_t index = 0;
    for (const Letter& l : letters) index = index * 4 + static_cast<std::uint64_t>(l.value);
    return Label(static_cast<int>(letters.size()), index);
}

Letter Label::letter(int i) const {
    if (i < 1 || i > letters_)
        throw IndexError("letter index " + std::to_string(i) + " out of range [1," +
                         std::to_string(letters_) + "]");
    int shift = 2 * (letters_ - i);
    return Letter(static_cast<int>((index_ >> shift) & 3));
}

std::vector<Letter> Label::to_letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(letters_));
    for (int i = 1; i <= letters_; ++i) out.push_back(letter(i));
    return out;
}

std::string Label::digits() const {
    std::string s;
    for (int i = 1; i <= letters_; ++i) s += static_cast<char>('0' + letter(i).value);
    return s;
}

}  // namespace qdb
