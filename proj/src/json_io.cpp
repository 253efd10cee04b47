#include "seqspace/json_io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace seqspace::io {

namespace {

// SAX-to-DOM builder that stores float tokens as their raw text. Everything
// else matches the default DOM construction.
class RawNumberBuilder : public nlohmann::json_sax<json> {
public:
    json result;

    bool null() override { return emit(json(nullptr)); }
    bool boolean(bool b) override { return emit(json(b)); }
    bool number_integer(number_integer_t v) override { return emit(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return emit(json(v)); }
    bool number_float(number_float_t, const string_t& raw) override { return emit(json(raw)); }
    bool string(string_t& s) override { return emit(json(s)); }
    bool binary(binary_t& b) override { return emit(json::binary(b)); }

    bool start_object(std::size_t) override {
        levels_.push_back({json::object(), pending_key_});
        return true;
    }
    bool key(string_t& k) override {
        pending_key_ = k;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override {
        levels_.push_back({json::array(), pending_key_});
        return true;
    }
    bool end_array() override { return close(); }

    bool parse_error(std::size_t pos, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw std::invalid_argument("malformed JSON at byte " + std::to_string(pos) + ": " +
                                    ex.what());
    }

private:
    struct Level {
        json value;
        std::string key_in_parent;
    };

    bool emit(json v) {
        if (levels_.empty()) {
            result = std::move(v);
        } else if (levels_.back().value.is_object()) {
            levels_.back().value[pending_key_] = std::move(v);
        } else {
            levels_.back().value.push_back(std::move(v));
        }
        return true;
    }

    bool close() {
        Level done = std::move(levels_.back());
        levels_.pop_back();
        if (levels_.empty()) {
            result = std::move(done.value);
        } else if (levels_.back().value.is_object()) {
            levels_.back().value[done.key_in_parent] = std::move(done.value);
        } else {
            levels_.back().value.push_back(std::move(done.value));
        }
        return true;
    }

    std::vector<Level> levels_;
    std::string pending_key_;
};

}  // namespace

json parse_text(const std::string& text) {
    RawNumberBuilder builder;
    json::sax_parse(text, &builder);
    return std::move(builder.result);
}

json parse_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

Scalar scalar_from(const json& j, Mode mode, const std::string& path) {
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>(), mode);
        } catch (const std::exception& ex) {
            throw std::invalid_argument(path + ": " + ex.what());
        }
    }
    if (j.is_number_integer()) return Scalar::parse(std::to_string(j.get<long long>()), mode);
    if (j.is_number_unsigned())
        return Scalar::parse(std::to_string(j.get<unsigned long long>()), mode);
    if (j.is_number_float()) {
        if (mode == Mode::Exact)
            throw std::invalid_argument(
                path + ": non-exact float value in exact mode; write it as a string literal");
        return Scalar::real(j.get<double>());
    }
    throw std::invalid_argument(path + ": expected a number or a numeric string");
}

std::vector<Scalar> scalars_from(const json& j, Mode mode, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(path + ": expected a nonempty array of numbers");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(scalar_from(j[i], mode, path + "[" + std::to_string(i) + "]"));
    return out;
}

SeqPrefix seq_from(const json& j, Mode mode, Tail tail, const std::string& path) {
    return SeqPrefix(scalars_from(j, mode, path), tail);
}

std::vector<SeqPrefix> matrix_rows_from(const json& j, Mode mode, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(path + ": expected a nonempty array of row arrays");
    std::vector<SeqPrefix> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(seq_from(j[i], mode, Tail::Zero, path + "[" + std::to_string(i) + "]"));
    return rows;
}

json to_json(const Scalar& s) {
    if (s.is_exact()) return s.str();
    return s.value();
}

json to_json(const SeqPrefix& x) {
    json arr = json::array();
    for (std::size_t i = 0; i < x.length(); ++i) arr.push_back(to_json(x[i]));
    return arr;
}

json to_json(const LowerTable& t) {
    json rows = json::array();
    for (std::size_t n = 0; n < t.size(); ++n) {
        json row = json::array();
        for (std::size_t k = 0; k <= n; ++k) row.push_back(to_json(t.entry(n, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Verdict& v) {
    json j;
    j["state"] = std::string(verdict_state_name(v.state));
    j["estimate"] = to_json(v.estimate);
    if (v.witness) j["witness"] = *v.witness;
    json trend = json::array();
    for (const Scalar& s : v.trend) trend.push_back(to_json(s));
    j["trend"] = std::move(trend);
    j["stabilized"] = v.stabilized;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json to_json(const ConditionReport& r) {
    json j;
    j["subject"] = r.subject();
    json conds = json::array();
    for (const auto& [key, verdict] : r.conditions()) {
        json c = to_json(verdict);
        c["id"] = key;
        conds.push_back(std::move(c));
    }
    j["conditions"] = std::move(conds);
    j["conclusion"] = std::string(conclusion_name(r.conclusion()));
    if (auto w = r.witness()) j["witness"] = *w;
    return j;
}

json to_json(const ClassifyReport& r) {
    json j = to_json(r.report);
    j["from"] = std::string(space_name(r.from));
    j["to"] = std::string(space_name(r.to));
    j["correction_remark"] = r.correction_remark;
    json gammas = json::array();
    for (const Scalar& g : r.tables.tail_limits) gammas.push_back(to_json(g));
    j["gamma"] = std::move(gammas);
    json dual = json::array();
    for (const SeqPrefix& row : r.tables.dual_rows) dual.push_back(to_json(row));
    j["R"] = std::move(dual);
    return j;
}

}  // namespace seqspace::io
