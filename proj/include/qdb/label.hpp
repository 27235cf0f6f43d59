#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdb/error.hpp"

namespace qdb {

// One quaternary digit, i.e. one of |00>, |01>, |10>, |11>.
struct Letter {
    int value;

    explicit Letter(int v) : value(v) {
        if (v < 0 || v > 3)
            throw IndexError("letter value out of range: " + std::to_string(v));
    }
    bool operator==(const Letter& o) const { return value == o.value; }
};

// An n-letter base-4 string naming one cell of a digitized file.
// Letters are most significant first: index = sum letters[i] * 4^(n-1-i).
class Label {
public:
    Label() : letters_(0), index_(0) {}
    Label(int letters, std::uint64_t index);

    static Label from_letters(const std::vector<Letter>& letters);

    int letter_count() const { return letters_; }
    std::uint64_t index() const { return index_; }

    // 1-based, most significant first.
    Letter letter(int i) const;
    std::vector<Letter> to_letters() const;

    // Digit string, e.g. "102" for n=3; "" for n=0.
    std::string digits() const;

    bool operator==(const Label& o) const {
        return letters_ == o.letters_ && index_ == o.index_;
    }
    bool operator!=(const Label& o) const { return !(*this == o); }

private:
    int letters_;
    std::uint64_t index_;
};

// Number of labels in an n-letter space.
std::uint64_t label_space_size(int letters);

}  // namespace qdb
