#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tcover/path.hpp"
#include "tcover/predicate.hpp"

namespace tcover {

/// Arithmetic characteristics of a digital straight segment: every point
/// satisfies mu <= a*x - b*y <= mu + omega - 1, with omega = max(|a|,|b|) on
/// 8-paths and |a| + |b| on 4-paths. gcd(a, b) = 1, a >= 0, and b > 0 when
/// a == 0. The reported (a, b) has the smallest omega among valid lines.
struct DssCharacteristics {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t mu = 0;
    std::int64_t omega = 1;

    /// Leaning points (a*x - b*y == mu for upper, == mu + omega - 1 for
    /// lower), first and last occurrence in interval order.
    GridPoint first_upper;
    GridPoint last_upper;
    GridPoint first_lower;
    GridPoint last_lower;
};

namespace detail {

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0
};

int compare(const Fraction& lhs, const Fraction& rhs);

/// Simplest fraction (smallest denominator) inside a non-empty interval with
/// optionally open bounds, found by Stern-Brocot descent.
Fraction simplest_between(const Fraction& lo, bool lo_open, const Fraction& hi, bool hi_open);

/// The point set lies in a digital line iff, in one of two coordinate
/// frames, some slope s in a fixed range gives range(Y - s*X) < 1. Each pair
/// of points restricts s to an open interval; a frame stays feasible while
/// the intersection of those intervals is non-empty. Pairs are identified by
/// path indices so that removing a point only forces a rebuild when it is one
/// of the pairs that currently bound the window.
class SlopeFrame {
  public:
    enum class Kind { EightYofX, EightXofY, FourSum, FourDiff };

    explicit SlopeFrame(Kind kind);

    Kind kind() const { return kind_; }
    bool feasible() const { return !dead_; }

    /// Restricts the window with the pair constraints between `q` and each
    /// of `others`. Returns false if the window becomes empty.
    bool add(const DigitalPath& path, std::size_t q, const std::vector<std::size_t>& others);
    /// True if removing path index `index` may widen the window.
    bool depends_on(std::size_t index) const;
    void rebuild(const DigitalPath& path, const std::vector<std::size_t>& indices);

    Fraction simplest_slope() const;
    /// Converts a slope of this frame into (a, b) with omega == slope.den.
    std::array<std::int64_t, 2> line_coefficients(const Fraction& slope) const;

  private:
    struct Bound {
        Fraction value;
        bool open = false;
        std::size_t i = npos;  // pair that set the bound, npos for the frame range
        std::size_t j = npos;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void restrict_pair(const DigitalPath& path, std::size_t p, std::size_t q);
    void reset_window();

    Kind kind_;
    Bound lo_;
    Bound hi_;
    bool dead_ = false;
    std::array<std::size_t, 4> dead_by_{npos, npos, npos, npos};
};

}  // namespace detail

/// Incremental DSS recognizer on a 4- or 8-path. Extensions cost O(len);
/// removing the first point costs O(1) unless that point bounds the current
/// slope window, in which case the window is rebuilt in O(len^2).
class DssRecognizer final : public Recognizer {
  public:
    explicit DssRecognizer(const DigitalPath& path);

    /// Requires !empty().
    DssCharacteristics characteristics() const;

  protected:
    bool start_at(std::size_t index) override;
    bool push_back(std::size_t index) override;
    bool push_front(std::size_t index) override;
    void pop_front(std::size_t index) override;

  private:
    bool add_point(std::size_t index);
    std::vector<std::size_t> current_indices() const;

    std::array<detail::SlopeFrame, 2> frames_;
};

class DssPredicate final : public Predicate {
  public:
    /// Throws InputError on index-only paths.
    explicit DssPredicate(const DigitalPath& path);
    bool holds(const IndexInterval& iv) const override;
    std::unique_ptr<Recognizer> make_recognizer() const override;
};

/// Stateless DSS test on one interval.
bool dss_holds(const DigitalPath& path, const IndexInterval& iv);

/// Characteristics of the interval, or nullopt if it is not a DSS.
std::optional<DssCharacteristics> dss_characteristics(const DigitalPath& path, const IndexInterval& iv);

}  // namespace tcover
