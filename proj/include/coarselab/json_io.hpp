#pragma once

#include "coarselab/covering.hpp"
#include "coarselab/metric_space.hpp"
#include "coarselab/polyhedron.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coarselab {

/// Fixed 12-significant-digit float formatting so identical runs produce
/// byte-identical reports.
std::string format_number(double v);

/// Minimal ordered JSON value for report emission. Keys keep insertion order.
class JsonValue {
public:
    static JsonValue number(double v);
    static JsonValue integer(long long v);
    static JsonValue boolean(bool v);
    static JsonValue string(std::string v);
    static JsonValue array();
    static JsonValue object();
    static JsonValue null();

    JsonValue& push(JsonValue v);                       // arrays
    JsonValue& set(const std::string& key, JsonValue v); // objects

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Null, Number, Integer, Bool, String, Array, Object };
    Kind kind_ = Kind::Null;
    double num_ = 0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> fields_;

    void dump_to(std::string& out, int indent, int depth) const;
};

// ---- file formats -------------------------------------------------------

/// Space file: { "n": int, "dist": [[float]] }, symmetry validated on load.
FiniteMetricSpace load_space(const std::string& path);
void save_space(const FiniteMetricSpace& space, const std::string& path);

/// Covering file: { "members": [[int]], "colors": [int]|null }.
Covering load_covering(const std::string& path, const FiniteMetricSpace& space);
void save_covering(const Covering& cov, const std::string& path);

/// Complex file: { "vertices": [string], "maximal_simplices": [[string]] }.
void save_complex(const UniformComplex& P, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace coarselab
