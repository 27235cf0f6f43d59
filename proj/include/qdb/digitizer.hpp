#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdb/label.hpp"
#include "qdb/value.hpp"

namespace qdb {

enum class CodecPolicy { InsertionOrder, ValueRank };

std::string to_string(CodecPolicy p);
CodecPolicy codec_policy_from_string(const std::string& s);

// pad_plan(N): the least power-of-4 file size that fits N real entries.
struct PadPlan {
    std::uint64_t padded_size;  // 4^letters
    int letters;
    std::uint64_t padding_count;
};

PadPlan pad_plan(std::uint64_t real_count);

// Dense bijection between one file's distinct property values and the
// labels 0..N-1. Immutable after build; rebuilds produce new codecs.
class Codec {
public:
    Codec() = default;

    // Under InsertionOrder the label is the position in `values`; under
    // ValueRank it is the rank in ascending value order. Values must be
    // pairwise distinct.
    static Codec build(const std::string& file_id, const std::string& property,
                       const std::vector<Value>& values, CodecPolicy policy);

    const std::string& file_id() const { return file_id_; }
    const std::string& property() const { return property_; }
    CodecPolicy policy() const { return policy_; }
    std::uint64_t count() const { return backward_.size(); }
    int letter_count() const { return letters_; }

    // Absent is not an error: it signals a guaranteed-empty search.
    std::optional<Label> encode(const Value& v) const;
    const Value& decode(std::uint64_t label) const;
    const Value& decode(const Label& l) const { return decode(l.index()); }

    // Values in ascending label order.
    const std::vector<Value>& values_by_label() const { return backward_; }
    // The value set in ascending value order (the key property's domain).
    std::vector<Value> sorted_values() const;

    // One file per codec: a header line, then one tab-separated line per
    // entry in ascending label order.
    void save(std::ostream& out) const;
    static Codec load(std::istream& in);

private:
    std::string file_id_;
    std::string property_;
    CodecPolicy policy_ = CodecPolicy::InsertionOrder;
    int letters_ = 0;
    std::unordered_map<Value, std::uint64_t, ValueHash> forward_;
    std::vector<Value> backward_;
};

}  // namespace qdb
