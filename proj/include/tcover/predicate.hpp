#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tcover/path.hpp"

namespace tcover {

/// Selects a registered predicate by name, with integer parameters
/// (`k` for max_len, `w` and `h` for bbox).
struct PredicateSpec {
    std::string name;
    std::map<std::string, std::int64_t> params;

    friend bool operator==(const PredicateSpec&, const PredicateSpec&) = default;
};

/// `{"name": "max_len", "params": {"k": 3}}`
std::string predicate_spec_to_json(const PredicateSpec& spec);
PredicateSpec predicate_spec_from_json(std::string_view text);
std::string describe(const PredicateSpec& spec);

/// Incremental truth maintenance for one predicate over sub-paths of a fixed
/// path. The represented interval always satisfies the predicate; a failed
/// extension leaves the state untouched.
///
/// Every call that has to decide the predicate (reset, and any extension
/// that is not blocked by the path boundary) increments evaluations().
class Recognizer {
  public:
    explicit Recognizer(const DigitalPath& path) : path_(&path) {}
    virtual ~Recognizer() = default;

    Recognizer(const Recognizer&) = delete;
    Recognizer& operator=(const Recognizer&) = delete;

    /// Moves to the singleton {p_index}; returns whether it satisfies the
    /// predicate. On false the recognizer is left empty.
    bool reset(std::size_t index);

    /// Appends the next index (p_{end+1}). False if blocked or rejected.
    bool try_extend_positive();
    /// Prepends the previous index (p_{start-1}). False if blocked or rejected.
    bool try_extend_negative();
    /// Drops the first point. Dropping the last point leaves it empty.
    void remove_negative_end();

    bool can_extend_positive() const;
    bool can_extend_negative() const;

    bool empty() const { return len_ == 0; }
    /// Current interval; only meaningful when !empty().
    IndexInterval interval() const { return {start_, len_}; }
    std::uint64_t evaluations() const { return evaluations_; }
    const DigitalPath& path() const { return *path_; }

  protected:
    /// Hooks for concrete recognizers. The tentative hooks must commit the
    /// new point only when they return true. They run before the base
    /// updates start/len, so interval() still describes the old state.
    virtual bool start_at(std::size_t index) = 0;
    virtual bool push_back(std::size_t index) = 0;
    virtual bool push_front(std::size_t index) = 0;
    virtual void pop_front(std::size_t index) = 0;

  private:
    const DigitalPath* path_;
    std::size_t start_ = 0;
    std::size_t len_ = 0;
    std::uint64_t evaluations_ = 0;
};

/// A predicate on the sub-paths of one path. Conservative predicates are
/// true on every sub-interval of an interval they accept.
class Predicate : public std::enable_shared_from_this<Predicate> {
  public:
    explicit Predicate(const DigitalPath& path) : path_(&path) {}
    virtual ~Predicate() = default;

    virtual bool holds(const IndexInterval& iv) const = 0;

    /// Default recognizer re-evaluates holds() on every tentative interval,
    /// which costs O(len) per call for most predicates.
    virtual std::unique_ptr<Recognizer> make_recognizer() const;

    const DigitalPath& path() const { return *path_; }

  private:
    const DigitalPath* path_;
};

struct PredicateInfo {
    std::string name;
    std::string description;
    std::vector<std::string> params;
    /// False only for diagnostic predicates planted to exercise the
    /// conservativity checker.
    bool conservative = true;
};

const std::vector<PredicateInfo>& registered_predicates();

/// Throws InputError for unknown names, missing or out-of-range parameters,
/// and predicate/adjacency mismatches (dss on index-only paths).
std::shared_ptr<const Predicate> make_predicate(const PredicateSpec& spec, const DigitalPath& path);

/// The recognizer keeps its predicate alive; `path` must outlive it.
std::unique_ptr<Recognizer> make_recognizer(const PredicateSpec& spec, const DigitalPath& path);

// Shipped predicates, also usable directly.

/// len <= k.
class MaxLenPredicate final : public Predicate {
  public:
    MaxLenPredicate(const DigitalPath& path, std::int64_t k);
    bool holds(const IndexInterval& iv) const override;
    std::unique_ptr<Recognizer> make_recognizer() const override;
    std::int64_t k() const { return k_; }

  private:
    std::int64_t k_;
};

enum class Axis { X, Y };

/// Coordinate along `axis` never both increases and decreases between
/// consecutive points of the sub-path. A full turn of a closed path also
/// includes the closing step, so all starting points agree on it.
class MonotonePredicate final : public Predicate {
  public:
    MonotonePredicate(const DigitalPath& path, Axis axis);
    bool holds(const IndexInterval& iv) const override;
    std::unique_ptr<Recognizer> make_recognizer() const override;
    Axis axis() const { return axis_; }

  private:
    Axis axis_;
};

/// Point extents (max - min + 1) fit within w x h. Removal re-scans the
/// interval, O(len).
class BoundingBoxPredicate final : public Predicate {
  public:
    BoundingBoxPredicate(const DigitalPath& path, std::int64_t width, std::int64_t height);
    bool holds(const IndexInterval& iv) const override;
    std::unique_ptr<Recognizer> make_recognizer() const override;

  private:
    std::int64_t width_;
    std::int64_t height_;
};

/// Interval contains index 0. Not conservative; planted for diagnostics.
class ContainsFirstPredicate final : public Predicate {
  public:
    explicit ContainsFirstPredicate(const DigitalPath& path) : Predicate(path) {}
    bool holds(const IndexInterval& iv) const override;
};

struct ConservativityReport {
    struct Counterexample {
        std::size_t path_index = 0;
        IndexInterval outer;  ///< predicate holds
        IndexInterval inner;  ///< sub-interval of outer where it fails
    };

    std::size_t trials = 0;
    std::size_t accepted_outer = 0;  ///< trials that found a true outer interval
    std::optional<Counterexample> counterexample;

    bool pass() const { return !counterexample.has_value(); }
};

/// Randomized check: samples intervals X where the predicate holds and
/// random sub-intervals Y of X, stopping at the first Y that fails.
ConservativityReport check_conservative(const PredicateSpec& spec, const std::vector<DigitalPath>& paths,
                                        std::size_t trials, std::uint64_t seed);

}  // namespace tcover
