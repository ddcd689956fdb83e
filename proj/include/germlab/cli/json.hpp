#pragma once

// JSON encodings of library values and reports. Keys keep insertion order so
// that output is stable; every number is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/germ/report.hpp"
#include "germlab/intersect.hpp"

namespace germlab::cli {

using Json = nlohmann::ordered_json;

// Integers beyond 2^53 are written as decimal strings.
inline Json exact(const Integer& z) {
    static const Integer limit = Integer(1) << 53;
    if (abs(z) <= limit) return Json(z.get_si());
    return Json(z.get_str());
}
inline Json exact(std::uint64_t n) { return exact(Integer(std::to_string(n))); }

inline Json encode(const Rational& q) { return Json(q.get_str()); }

inline Json encode(const std::vector<Rational>& point) {
    Json j = Json::array();
    for (const auto& q : point) j.push_back(encode(q));
    return j;
}

inline Json encode(const std::vector<std::vector<Rational>>& points) {
    Json j = Json::array();
    for (const auto& p : points) j.push_back(encode(p));
    return j;
}

inline Json encode(const Polynomial& p) { return Json(p.to_string()); }

inline Json encode(const std::vector<Polynomial>& ps) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(encode(p));
    return j;
}

inline Json encode(const Ideal& ideal) { return encode(ideal.generators()); }

inline Json encode(const std::vector<Monomial>& ms, const RingPtr& ring) {
    Json j = Json::array();
    for (const auto& m : ms) j.push_back(Polynomial::monomial(ring, m).to_string());
    return j;
}

inline Json encode(const IntPoly& q) {
    Json j = Json::array();
    for (const auto& c : q) j.push_back(exact(c));
    return j;
}

inline Json encode(const IntMatrix& m) {
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (long v : row) r.push_back(v);
        j.push_back(std::move(r));
    }
    return j;
}

inline Json encode(const std::vector<std::string>& words) {
    Json j = Json::array();
    for (const auto& w : words) j.push_back(w);
    return j;
}

inline Json encode(const RingPtr& ring) {
    Json j = Json::array();
    for (std::size_t i = 0; i < ring->arity(); ++i) j.push_back(ring->name(i));
    return j;
}

inline Json encode(const FiberSample& s, bool with_regularity) {
    Json j;
    if (s.source) j["source"] = encode(*s.source);
    j["value"] = encode(s.value);
    if (with_regularity) j["regular"] = s.regular;
    j["count"] = s.count;
    return j;
}

// Geometric samples are not tested for regularity, so the flag is omitted.
inline Json encode(const SamplingReport& r, bool with_regularity = true) {
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back(encode(s, with_regularity));
    return samples;
}

inline Json encode_sizes(const std::vector<std::size_t>& v) {
    Json j = Json::array();
    for (auto n : v) j.push_back(n);
    return j;
}

template <class T>
Json encode_optional(const std::optional<T>& v) {
    if (!v) return Json(nullptr);
    return Json(*v);
}

}  // namespace germlab::cli
