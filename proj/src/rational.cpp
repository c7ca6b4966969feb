#include "azi/rational.hpp"

#include "azi/errors.hpp"

#include <cctype>

namespace azi {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidEdge: return "InvalidEdge";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DegenerateEdge: return "DegenerateEdge";
        case ErrorKind::UnsupportedGraph: return "UnsupportedGraph";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::NotATree: return "NotATree";
        case ErrorKind::PatternMismatch: return "PatternMismatch";
        case ErrorKind::DegenerateResult: return "DegenerateResult";
        case ErrorKind::EmptyDomain: return "EmptyDomain";
        case ErrorKind::RefusedTooLarge: return "RefusedTooLarge";
        case ErrorKind::RefusedOutOfHypothesis: return "RefusedOutOfHypothesis";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Error";
}

std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string to_decimal_string(const Rational& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string s = whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        s += "." + std::string(digits - f.size(), '0') + f;
    }
    if (negative && (whole != 0 || frac != 0)) s.insert(s.begin(), '-');
    return s;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational rational_from_string(const std::string& text) {
    auto is_integer = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer(text)) throw Error(ErrorKind::ParseError, "bad rational: " + text);
            return Rational(BigInt(text));
        }
        std::string p = text.substr(0, slash);
        std::string q = text.substr(slash + 1);
        if (!is_integer(p) || !is_integer(q) || BigInt(q) == 0)
            throw Error(ErrorKind::ParseError, "bad rational: " + text);
        return Rational(BigInt(p), BigInt(q));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad rational: " + text);
    }
}

} // namespace azi
