#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace rayfan {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer and
// Rat a reduced fraction with positive denominator. mpq_class keeps the
// reduced-form invariant under arithmetic; raw (num, den) construction has
// to canonicalize explicitly, which rat() below does.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Accepts "p", "p/q", and tolerates surrounding spaces.
inline Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat(Int(s), 1);
        return rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

inline std::string format_rat(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace rayfan
