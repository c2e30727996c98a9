#pragma once
// Shared CLI plumbing: global options, rational argument parsing, and the
// subcommand registration hooks.

#include "shq/io.hh"
#include "shq/mp.hh"

#include <CLI11.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace shqcli {

struct global {
    unsigned precision = 0; // 0 = take RC_PRECISION or the default
    unsigned jobs = 0;      // 0 = hardware
    std::string output;     // empty = stdout

    unsigned resolve_precision(unsigned fallback = 128) const {
        unsigned bits = fallback;
        if (const char* env = std::getenv("RC_PRECISION")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v > 0)
                bits = static_cast<unsigned>(v);
            else
                throw std::domain_error("RC_PRECISION is not a positive integer");
        }
        if (precision)
            bits = precision;
        if (bits < 64)
            throw std::domain_error("precision must be at least 64 bits");
        return bits;
    }
};

// Accepts "p/q", integers, and plain decimals ("1.5" -> 3/2).
// gmp string parsing reads a leading 0 as an octal prefix, so normalize
// decimal digit strings before handing them over
inline shq::bigint parse_int10(std::string s) {
    std::string sign;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') sign = "-";
        s.erase(0, 1);
    }
    std::size_t nz = s.find_first_not_of('0');
    s = nz == std::string::npos ? "0" : s.substr(nz);
    return shq::bigint(sign + s);
}

inline shq::rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            shq::bigint num = parse_int10(s.substr(0, slash));
            shq::bigint den = parse_int10(s.substr(slash + 1));
            if (den == 0)
                throw std::domain_error("zero denominator");
            return shq::rat(num) / shq::rat(den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t places = s.size() - dot - 1;
            shq::rat r{parse_int10(digits)};
            for (std::size_t i = 0; i < places; ++i)
                r /= 10;
            return r;
        }
        return shq::rat{parse_int10(s)};
    } catch (const std::domain_error&) {
        throw;
    } catch (...) {
        throw std::domain_error("not a rational number: " + s);
    }
}

void register_sheffer(CLI::App& app, global& g);
void register_riordan(CLI::App& app, global& g);
void register_combinat(CLI::App& app, global& g);
void register_analysis(CLI::App& app, global& g);
void register_zeros(CLI::App& app, global& g);

} // namespace shqcli
