#include "coarselab/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coarselab {

std::string format_number(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e308" : (v < 0 ? "-1e308" : "0");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

JsonValue JsonValue::number(double v) {
    JsonValue j;
    j.kind_ = Kind::Number;
    j.num_ = v;
    return j;
}
JsonValue JsonValue::integer(long long v) {
    JsonValue j;
    j.kind_ = Kind::Integer;
    j.int_ = v;
    return j;
}
JsonValue JsonValue::boolean(bool v) {
    JsonValue j;
    j.kind_ = Kind::Bool;
    j.bool_ = v;
    return j;
}
JsonValue JsonValue::string(std::string v) {
    JsonValue j;
    j.kind_ = Kind::String;
    j.str_ = std::move(v);
    return j;
}
JsonValue JsonValue::array() {
    JsonValue j;
    j.kind_ = Kind::Array;
    return j;
}
JsonValue JsonValue::object() {
    JsonValue j;
    j.kind_ = Kind::Object;
    return j;
}
JsonValue JsonValue::null() { return JsonValue(); }

JsonValue& JsonValue::push(JsonValue v) {
    if (kind_ != Kind::Array) throw std::logic_error("push on non-array");
    items_.push_back(std::move(v));
    return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    if (kind_ != Kind::Object) throw std::logic_error("set on non-object");
    fields_.emplace_back(key, std::move(v));
    return *this;
}

namespace {
void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}
} // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Number: out += format_number(num_); break;
        case Kind::Integer: out += std::to_string(int_); break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::String: escape_into(out, str_); break;
        case Kind::Array: {
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += "[";
            for (size_t i = 0; i < items_.size(); ++i) {
                out += (i ? ",\n" : "\n") + pad;
                items_[i].dump_to(out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            break;
        }
        case Kind::Object: {
            if (fields_.empty()) {
                out += "{}";
                break;
            }
            out += "{";
            for (size_t i = 0; i < fields_.size(); ++i) {
                out += (i ? ",\n" : "\n") + pad;
                escape_into(out, fields_[i].first);
                out += ": ";
                fields_[i].second.dump_to(out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            break;
        }
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += "\n";
    return out;
}

FiniteMetricSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open space file: " + path);
    nlohmann::json j;
    in >> j;
    int n = j.at("n").get<int>();
    auto rows = j.at("dist").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::runtime_error("space file: n does not match dist rows");
    return FiniteMetricSpace::from_matrix(rows);
}

void save_space(const FiniteMetricSpace& space, const std::string& path) {
    JsonValue j = JsonValue::object();
    j.set("n", JsonValue::integer(space.size()));
    JsonValue rows = JsonValue::array();
    for (int i = 0; i < space.size(); ++i) {
        JsonValue row = JsonValue::array();
        for (int k = 0; k < space.size(); ++k) row.push(JsonValue::number(space.dist(i, k)));
        rows.push(std::move(row));
    }
    j.set("dist", std::move(rows));
    write_text_file(path, j.dump());
}

Covering load_covering(const std::string& path, const FiniteMetricSpace& space) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open covering file: " + path);
    nlohmann::json j;
    in >> j;
    auto members = j.at("members").get<std::vector<std::vector<int>>>();
    std::optional<std::vector<int>> colors;
    if (j.contains("colors") && !j.at("colors").is_null())
        colors = j.at("colors").get<std::vector<int>>();
    std::vector<PointSet> sets;
    sets.reserve(members.size());
    for (auto& m : members) sets.push_back(make_point_set(std::move(m), space.size()));
    return make_covering(space, std::move(sets), std::move(colors));
}

void save_covering(const Covering& cov, const std::string& path) {
    JsonValue j = JsonValue::object();
    JsonValue members = JsonValue::array();
    for (const auto& m : cov.members) {
        JsonValue row = JsonValue::array();
        for (int z : m) row.push(JsonValue::integer(z));
        members.push(std::move(row));
    }
    j.set("members", std::move(members));
    if (cov.colors) {
        JsonValue colors = JsonValue::array();
        for (int c : *cov.colors) colors.push(JsonValue::integer(c));
        j.set("colors", std::move(colors));
    } else {
        j.set("colors", JsonValue::null());
    }
    write_text_file(path, j.dump());
}

void save_complex(const UniformComplex& P, const std::string& path) {
    JsonValue j = JsonValue::object();
    JsonValue verts = JsonValue::array();
    for (const auto& l : P.labels()) verts.push(JsonValue::string(l));
    j.set("vertices", std::move(verts));
    JsonValue maximal = JsonValue::array();
    for (const auto& s : maximal_simplex_labels(P)) {
        JsonValue row = JsonValue::array();
        for (const auto& l : s) row.push(JsonValue::string(l));
        maximal.push(std::move(row));
    }
    j.set("maximal_simplices", std::move(maximal));
    write_text_file(path, j.dump());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace coarselab
