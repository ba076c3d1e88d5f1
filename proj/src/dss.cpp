#include "tcover/dss.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tcover/error.hpp"

namespace tcover {
namespace detail {

int compare(const Fraction& lhs, const Fraction& rhs) {
    const __int128 l = static_cast<__int128>(lhs.num) * rhs.den;
    const __int128 r = static_cast<__int128>(rhs.num) * lhs.den;
    return (l > r) - (l < r);
}

namespace {

bool below(const Fraction& f, const Fraction& lo, bool lo_open) {
    const int c = compare(f, lo);
    return c < 0 || (c == 0 && lo_open);
}

bool above(const Fraction& f, const Fraction& hi, bool hi_open) {
    const int c = compare(f, hi);
    return c > 0 || (c == 0 && hi_open);
}

Fraction negate(const Fraction& f) { return {-f.num, f.den}; }

}  // namespace

Fraction simplest_between(const Fraction& lo, bool lo_open, const Fraction& hi, bool hi_open) {
    const Fraction zero{0, 1};
    if (!below(zero, lo, lo_open) && !above(zero, hi, hi_open)) return zero;
    if (compare(hi, zero) <= 0) {
        const Fraction f = simplest_between(negate(hi), hi_open, negate(lo), lo_open);
        return negate(f);
    }
    // Window is strictly positive: descend the Stern-Brocot tree.
    std::int64_t ln = 0, ld = 1, rn = 1, rd = 0;
    for (;;) {
        const Fraction mid{ln + rn, ld + rd};
        if (below(mid, lo, lo_open)) {
            ln = mid.num;
            ld = mid.den;
        } else if (above(mid, hi, hi_open)) {
            rn = mid.num;
            rd = mid.den;
        } else {
            return mid;
        }
    }
}

SlopeFrame::SlopeFrame(Kind kind) : kind_(kind) { reset_window(); }

void SlopeFrame::reset_window() {
    const bool eight = kind_ == Kind::EightYofX || kind_ == Kind::EightXofY;
    lo_ = Bound{{eight ? -1 : 0, 1}, false};
    hi_ = Bound{{1, 1}, false};
    dead_ = false;
    dead_by_.fill(npos);
}

namespace {

// (X, Y) coordinates of a point in a frame.
std::array<std::int64_t, 2> frame_coordinates(SlopeFrame::Kind kind, const GridPoint& p) {
    switch (kind) {
        case SlopeFrame::Kind::EightYofX: return {p.x, p.y};
        case SlopeFrame::Kind::EightXofY: return {p.y, p.x};
        case SlopeFrame::Kind::FourSum: return {p.x + p.y, p.x};
        case SlopeFrame::Kind::FourDiff: return {p.x - p.y, p.x};
    }
    return {0, 0};
}

}  // namespace

void SlopeFrame::restrict_pair(const DigitalPath& path, std::size_t p, std::size_t q) {
    const auto a = frame_coordinates(kind_, path[p]);
    const auto b = frame_coordinates(kind_, path[q]);
    std::int64_t dx = b[0] - a[0];
    std::int64_t dy = b[1] - a[1];
    if (dx == 0) {
        if (dy == 0) return;
        dead_ = true;
        dead_by_ = {p, q, npos, npos};
        return;
    }
    if (dx < 0) {
        dx = -dx;
        dy = -dy;
    }
    // |dy - s*dx| < 1  <=>  (dy - 1)/dx < s < (dy + 1)/dx
    const Fraction lower{dy - 1, dx};
    const Fraction upper{dy + 1, dx};
    if (const int c = compare(lower, lo_.value); c > 0 || (c == 0 && !lo_.open)) lo_ = Bound{lower, true, p, q};
    if (const int c = compare(upper, hi_.value); c < 0 || (c == 0 && !hi_.open)) hi_ = Bound{upper, true, p, q};

    const int c = compare(lo_.value, hi_.value);
    if (c > 0 || (c == 0 && (lo_.open || hi_.open))) {
        dead_ = true;
        dead_by_ = {lo_.i, lo_.j, hi_.i, hi_.j};
    }
}

bool SlopeFrame::add(const DigitalPath& path, std::size_t q, const std::vector<std::size_t>& others) {
    for (std::size_t p : others) {
        if (dead_) break;
        restrict_pair(path, p, q);
    }
    return !dead_;
}

bool SlopeFrame::depends_on(std::size_t index) const {
    if (dead_) return std::find(dead_by_.begin(), dead_by_.end(), index) != dead_by_.end();
    return lo_.i == index || lo_.j == index || hi_.i == index || hi_.j == index;
}

void SlopeFrame::rebuild(const DigitalPath& path, const std::vector<std::size_t>& indices) {
    reset_window();
    for (std::size_t k = 1; k < indices.size() && !dead_; ++k) {
        for (std::size_t m = 0; m < k && !dead_; ++m) restrict_pair(path, indices[m], indices[k]);
    }
}

Fraction SlopeFrame::simplest_slope() const {
    if (dead_) throw std::logic_error("SlopeFrame::simplest_slope on an infeasible frame");
    return simplest_between(lo_.value, lo_.open, hi_.value, hi_.open);
}

std::array<std::int64_t, 2> SlopeFrame::line_coefficients(const Fraction& s) const {
    switch (kind_) {
        case Kind::EightYofX: return {s.num, s.den};
        case Kind::EightXofY: return {s.den, s.num};
        case Kind::FourSum: return {s.den - s.num, s.num};
        case Kind::FourDiff: return {s.den - s.num, -s.num};
    }
    return {0, 1};
}

}  // namespace detail

namespace {

using detail::SlopeFrame;

std::array<SlopeFrame, 2> frames_for(Adjacency a) {
    if (a == Adjacency::Four) return {SlopeFrame(SlopeFrame::Kind::FourSum), SlopeFrame(SlopeFrame::Kind::FourDiff)};
    return {SlopeFrame(SlopeFrame::Kind::EightYofX), SlopeFrame(SlopeFrame::Kind::EightXofY)};
}

void require_grid_adjacency(const DigitalPath& path) {
    if (path.adjacency == Adjacency::IndexOnly) {
        throw InputError("dss: undefined on index-only paths (requires 4- or 8-adjacency)");
    }
}

DssCharacteristics characteristics_of(const DigitalPath& path, const std::array<SlopeFrame, 2>& frames,
                                      const std::vector<std::size_t>& indices) {
    const SlopeFrame* best = nullptr;
    detail::Fraction best_slope;
    for (const auto& frame : frames) {
        if (!frame.feasible()) continue;
        const auto slope = frame.simplest_slope();
        if (!best || slope.den < best_slope.den) {
            best = &frame;
            best_slope = slope;
        }
    }
    if (!best) throw std::logic_error("dss: characteristics requested for a non-segment");

    auto [a, b] = best->line_coefficients(best_slope);
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    DssCharacteristics c;
    c.a = a;
    c.b = b;
    c.omega = path.adjacency == Adjacency::Four ? std::llabs(a) + std::llabs(b) : std::max(std::llabs(a), std::llabs(b));
    c.mu = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i : indices) c.mu = std::min(c.mu, a * path[i].x - b * path[i].y);

    bool seen_upper = false;
    bool seen_lower = false;
    for (std::size_t i : indices) {
        const std::int64_t r = a * path[i].x - b * path[i].y;
        if (r == c.mu) {
            if (!seen_upper) c.first_upper = path[i];
            c.last_upper = path[i];
            seen_upper = true;
        }
        if (r == c.mu + c.omega - 1) {
            if (!seen_lower) c.first_lower = path[i];
            c.last_lower = path[i];
            seen_lower = true;
        }
    }
    return c;
}

std::vector<std::size_t> indices_of(const IndexInterval& iv, std::size_t n) {
    std::vector<std::size_t> out(iv.len);
    for (std::size_t k = 0; k < iv.len; ++k) out[k] = interval_index(iv, k, n);
    return out;
}

// Stateless evaluation: adds points in interval order and stops as soon as
// both frames are infeasible.
bool evaluate(const DigitalPath& path, const IndexInterval& iv, std::array<SlopeFrame, 2>& frames) {
    const std::size_t n = path.size();
    std::vector<std::size_t> seen;
    seen.reserve(iv.len);
    for (std::size_t k = 0; k < iv.len; ++k) {
        const std::size_t q = interval_index(iv, k, n);
        bool any = false;
        for (auto& frame : frames) {
            if (frame.feasible()) any |= frame.add(path, q, seen);
        }
        if (!any) return false;
        seen.push_back(q);
    }
    return true;
}

}  // namespace

DssRecognizer::DssRecognizer(const DigitalPath& path) : Recognizer(path), frames_(frames_for(path.adjacency)) {
    require_grid_adjacency(path);
}

std::vector<std::size_t> DssRecognizer::current_indices() const {
    if (empty()) return {};
    return indices_of(interval(), path().size());
}

bool DssRecognizer::start_at(std::size_t) {
    frames_ = frames_for(path().adjacency);
    return true;
}

bool DssRecognizer::add_point(std::size_t index) {
    const auto others = current_indices();
    auto next = frames_;
    bool any = false;
    for (auto& frame : next) {
        if (frame.feasible()) any |= frame.add(path(), index, others);
    }
    if (!any) return false;
    frames_ = next;
    return true;
}

bool DssRecognizer::push_back(std::size_t index) { return add_point(index); }
bool DssRecognizer::push_front(std::size_t index) { return add_point(index); }

void DssRecognizer::pop_front(std::size_t index) {
    const IndexInterval iv = interval();
    std::vector<std::size_t> rest;
    bool built = false;
    for (auto& frame : frames_) {
        if (!frame.depends_on(index)) continue;
        if (!built) {
            rest = indices_of({(index + 1) % path().size(), iv.len - 1}, path().size());
            if (iv.len == 1) rest.clear();
            built = true;
        }
        frame.rebuild(path(), rest);
    }
}

DssCharacteristics DssRecognizer::characteristics() const {
    if (empty()) throw std::logic_error("DssRecognizer::characteristics on an empty recognizer");
    return characteristics_of(path(), frames_, current_indices());
}

DssPredicate::DssPredicate(const DigitalPath& path) : Predicate(path) { require_grid_adjacency(path); }

bool DssPredicate::holds(const IndexInterval& iv) const {
    auto frames = frames_for(path().adjacency);
    return evaluate(path(), iv, frames);
}

std::unique_ptr<Recognizer> DssPredicate::make_recognizer() const { return std::make_unique<DssRecognizer>(path()); }

bool dss_holds(const DigitalPath& path, const IndexInterval& iv) {
    require_grid_adjacency(path);
    auto frames = frames_for(path.adjacency);
    return evaluate(path, iv, frames);
}

std::optional<DssCharacteristics> dss_characteristics(const DigitalPath& path, const IndexInterval& iv) {
    require_grid_adjacency(path);
    auto frames = frames_for(path.adjacency);
    if (!evaluate(path, iv, frames)) return std::nullopt;
    return characteristics_of(path, frames, indices_of(iv, path.size()));
}

}  // namespace tcover
