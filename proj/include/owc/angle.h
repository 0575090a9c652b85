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

#ifndef OWC_ANGLE_H
#define OWC_ANGLE_H

#include <cstdint>
#include <string>
#include <string_view>

namespace owc {

/// A measurement or gate angle.
///
/// Angles are kept as exact rational multiples of pi whenever possible, reduced
/// into [0, 2pi). Arbitrary real angles fall back to a raw radian value, which is
/// never reduced. Text form: "p/qpi" (or "ppi" when q == 1) for exact angles and
/// a decimal radian literal (always containing '.' or an exponent) for floats.
class Angle {
   public:
    /// Zero, exact.
    Angle() = default;

    static Angle pi_fraction(int64_t numerator, int64_t denominator = 1);
    static Angle radians(double value);
    static Angle parse(std::string_view text);

    bool is_exact() const {
        return exact_;
    }
    /// Numerator / denominator of the multiple of pi. Only meaningful when exact.
    int64_t numerator() const {
        return num_;
    }
    int64_t denominator() const {
        return den_;
    }

    double to_radians() const;
    std::string str() const;

    Angle operator-() const;
    /// Shifts by pi.
    Angle plus_pi() const;

    bool operator==(const Angle &other) const;
    bool operator!=(const Angle &other) const {
        return !(*this == other);
    }

   private:
    bool exact_ = true;
    int64_t num_ = 0;
    int64_t den_ = 1;
    double rad_ = 0.0;
};

}  // namespace owc

#endif
