// Copyright 2026 The owc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "owc/angle.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

using namespace owc;

namespace {

int64_t parse_int(std::string_view text, std::string_view whole) {
    int64_t value = 0;
    auto begin = text.data();
    auto end = text.data() + text.size();
    if (begin != end && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        throw std::invalid_argument("Malformed angle '" + std::string(whole) + "'.");
    }
    return value;
}

}  // namespace

Angle Angle::pi_fraction(int64_t numerator, int64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("Angle denominator must be nonzero.");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    // Reduce modulo 2pi, i.e. modulo 2 * denominator in the numerator.
    int64_t period = 2 * denominator;
    numerator %= period;
    if (numerator < 0) {
        numerator += period;
    }
    int64_t g = std::gcd(numerator, denominator);
    if (g == 0) {
        g = 1;
    }
    Angle result;
    result.exact_ = true;
    result.num_ = numerator / g;
    result.den_ = denominator / g;
    if (result.num_ == 0) {
        result.den_ = 1;
    }
    return result;
}

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("Angle must be finite.");
    }
    Angle result;
    result.exact_ = false;
    result.num_ = 0;
    result.den_ = 1;
    result.rad_ = value;
    return result;
}

Angle Angle::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Empty angle.");
    }
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        std::string_view body = text.substr(0, text.size() - 2);
        if (body.empty() || body == "+") {
            return pi_fraction(1);
        }
        if (body == "-") {
            return pi_fraction(-1);
        }
        auto slash = body.find('/');
        if (slash == std::string_view::npos) {
            return pi_fraction(parse_int(body, text));
        }
        int64_t num = parse_int(body.substr(0, slash), text);
        int64_t den = parse_int(body.substr(slash + 1), text);
        if (den <= 0) {
            throw std::invalid_argument("Malformed angle '" + std::string(text) + "'.");
        }
        return pi_fraction(num, den);
    }
    double value = 0;
    auto begin = text.data();
    auto end = text.data() + text.size();
    if (*begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("Malformed angle '" + std::string(text) + "'.");
    }
    return radians(value);
}

double Angle::to_radians() const {
    if (!exact_) {
        return rad_;
    }
    return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Angle::str() const {
    if (exact_) {
        if (den_ == 1) {
            return std::to_string(num_) + "pi";
        }
        return std::to_string(num_) + "/" + std::to_string(den_) + "pi";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rad_);
    std::string out(buf, ptr);
    if (out.find_first_of(".e") == std::string::npos) {
        out += ".0";
    }
    return out;
}

Angle Angle::operator-() const {
    if (exact_) {
        return pi_fraction(-num_, den_);
    }
    return radians(-rad_);
}

Angle Angle::plus_pi() const {
    if (exact_) {
        return pi_fraction(num_ + den_, den_);
    }
    return radians(rad_ + std::numbers::pi);
}

bool Angle::operator==(const Angle &other) const {
    if (exact_ != other.exact_) {
        return false;
    }
    if (exact_) {
        return num_ == other.num_ && den_ == other.den_;
    }
    return rad_ == other.rad_;
}
