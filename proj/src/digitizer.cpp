#include "qdb/digitizer.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "qdb/error.hpp"

namespace qdb {

std::string to_string(CodecPolicy p) {
    return p == CodecPolicy::InsertionOrder ? "insertion" : "rank";
}

CodecPolicy codec_policy_from_string(const std::string& s) {
    if (s == "insertion") return CodecPolicy::InsertionOrder;
    if (s == "rank") return CodecPolicy::ValueRank;
    throw UserError("unknown codec policy: " + s + " (expected insertion|rank)");
}

PadPlan pad_plan(std::uint64_t real_count) {
    int letters = 0;
    std::uint64_t size = 1;
    while (size < real_count) {
        size *= 4;
        ++letters;
    }
    return PadPlan{size, letters, size - real_count};
}

Codec Codec::build(const std::string& file_id, const std::string& property,
                   const std::vector<Value>& values, CodecPolicy policy) {
    Codec c;
    c.file_id_ = file_id;
    c.property_ = property;
    c.policy_ = policy;
    c.backward_ = values;
    if (policy == CodecPolicy::ValueRank)
        std::sort(c.backward_.begin(), c.backward_.end());

    for (std::uint64_t label = 0; label < c.backward_.size(); ++label) {
        auto [it, inserted] = c.forward_.emplace(c.backward_[label], label);
        if (!inserted)
            throw DistinctnessError("duplicate value in codec for " + file_id + "." +
                                    property + ": " + c.backward_[label].literal());
    }
    c.letters_ = pad_plan(c.backward_.size()).letters;
    return c;
}

std::optional<Label> Codec::encode(const Value& v) const {
    auto it = forward_.find(v);
    if (it == forward_.end()) return std::nullopt;
    return Label(letters_, it->second);
}

const Value& Codec::decode(std::uint64_t label) const {
    if (label >= backward_.size())
        throw IndexError("codec label " + std::to_string(label) + " out of range");
    return backward_[label];
}

std::vector<Value> Codec::sorted_values() const {
    std::vector<Value> out = backward_;
    std::sort(out.begin(), out.end());
    return out;
}

void Codec::save(std::ostream& out) const {
    out << "CODEC " << file_id_ << ' ' << property_ << " n=" << letters_
        << " N=" << count() << " policy=" << to_string(policy_) << '\n';
    for (std::uint64_t label = 0; label < backward_.size(); ++label)
        out << label << '\t' << backward_[label].literal() << '\n';
}

static std::string expect_field(std::istringstream& in, const std::string& what) {
    std::string field;
    if (!(in >> field)) throw ConsistencyError("codec header missing " + what);
    return field;
}

static std::string strip_prefix(const std::string& field, const std::string& prefix) {
    if (field.rfind(prefix, 0) != 0)
        throw ConsistencyError("malformed codec header field: " + field);
    return field.substr(prefix.size());
}

Codec Codec::load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ConsistencyError("empty codec file");
    std::istringstream hs(header);
    if (expect_field(hs, "magic") != "CODEC")
        throw ConsistencyError("not a codec file: " + header);
    const std::string file_id = expect_field(hs, "file id");
    const std::string property = expect_field(hs, "property");
    const int letters = std::stoi(strip_prefix(expect_field(hs, "n"), "n="));
    const std::uint64_t count =
        std::stoull(strip_prefix(expect_field(hs, "N"), "N="));
    const CodecPolicy policy =
        codec_policy_from_string(strip_prefix(expect_field(hs, "policy"), "policy="));

    std::vector<Value> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ConsistencyError("malformed codec entry: " + line);
        const std::uint64_t label = std::stoull(line.substr(0, tab));
        if (label != values.size())
            throw ConsistencyError("codec labels not dense at " + line);
        values.push_back(Value::parse_literal(line.substr(tab + 1)));
    }
    if (values.size() != count)
        throw ConsistencyError("codec entry count mismatch in " + file_id);

    // Entries are stored in label order, which is already the policy's
    // order; rebuild under InsertionOrder to preserve it verbatim.
    Codec c = build(file_id, property, values, CodecPolicy::InsertionOrder);
    c.policy_ = policy;
    if (c.letters_ != letters)
        throw ConsistencyError("codec letter count mismatch in " + file_id);
    return c;
}

}  // namespace qdb
