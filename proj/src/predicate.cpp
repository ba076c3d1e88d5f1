#include "tcover/predicate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tcover/dss.hpp"
#include "tcover/error.hpp"

namespace tcover {

// ---------------------------------------------------------------------------
// PredicateSpec

std::string predicate_spec_to_json(const PredicateSpec& spec) {
    std::string out = "{\"name\": ";
    out += nlohmann::json(spec.name).dump();
    out += ", \"params\": {";
    bool first = true;
    for (const auto& [key, value] : spec.params) {
        if (!first) out += ", ";
        first = false;
        out += nlohmann::json(key).dump();
        out += ": ";
        out += std::to_string(value);
    }
    out += "}}";
    return out;
}

PredicateSpec predicate_spec_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("predicate JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string()) {
        throw InputError("predicate JSON: expected {\"name\": ..., \"params\": {...}}");
    }
    PredicateSpec spec;
    spec.name = doc["name"].get<std::string>();
    if (doc.contains("params")) {
        const auto& params = doc["params"];
        if (!params.is_object()) throw InputError("predicate JSON: \"params\" must be an object");
        for (const auto& [key, value] : params.items()) {
            if (!value.is_number_integer()) throw InputError("predicate JSON: parameter " + key + " must be an integer");
            spec.params[key] = value.get<std::int64_t>();
        }
    }
    return spec;
}

std::string describe(const PredicateSpec& spec) {
    std::ostringstream os;
    os << spec.name;
    for (const auto& [key, value] : spec.params) os << ' ' << key << '=' << value;
    return os.str();
}

// ---------------------------------------------------------------------------
// Recognizer

bool Recognizer::can_extend_positive() const {
    if (empty()) return false;
    const std::size_t n = path_->size();
    return path_->closed ? len_ < n : start_ + len_ < n;
}

bool Recognizer::can_extend_negative() const {
    if (empty()) return false;
    return path_->closed ? len_ < path_->size() : start_ > 0;
}

bool Recognizer::reset(std::size_t index) {
    if (index >= path_->size()) throw std::out_of_range("Recognizer::reset: index outside the path");
    ++evaluations_;
    len_ = 0;
    if (!start_at(index)) return false;
    start_ = index;
    len_ = 1;
    return true;
}

bool Recognizer::try_extend_positive() {
    if (!can_extend_positive()) return false;
    ++evaluations_;
    const std::size_t index = (start_ + len_) % path_->size();
    if (!push_back(index)) return false;
    ++len_;
    return true;
}

bool Recognizer::try_extend_negative() {
    if (!can_extend_negative()) return false;
    ++evaluations_;
    const std::size_t n = path_->size();
    const std::size_t index = (start_ + n - 1) % n;
    if (!push_front(index)) return false;
    start_ = index;
    ++len_;
    return true;
}

void Recognizer::remove_negative_end() {
    if (empty()) throw std::logic_error("Recognizer::remove_negative_end on an empty recognizer");
    pop_front(start_);
    start_ = (start_ + 1) % path_->size();
    --len_;
}

// ---------------------------------------------------------------------------
// Generic fallback

namespace {

class ReevaluatingRecognizer final : public Recognizer {
  public:
    explicit ReevaluatingRecognizer(std::shared_ptr<const Predicate> predicate)
        : Recognizer(predicate->path()), predicate_(std::move(predicate)) {}

  protected:
    bool start_at(std::size_t index) override { return predicate_->holds({index, 1}); }
    bool push_back(std::size_t) override {
        const IndexInterval iv = interval();
        return predicate_->holds({iv.start, iv.len + 1});
    }
    bool push_front(std::size_t index) override { return predicate_->holds({index, interval().len + 1}); }
    void pop_front(std::size_t) override {}

  private:
    std::shared_ptr<const Predicate> predicate_;
};

}  // namespace

std::unique_ptr<Recognizer> Predicate::make_recognizer() const {
    return std::make_unique<ReevaluatingRecognizer>(shared_from_this());
}

// ---------------------------------------------------------------------------
// max_len

MaxLenPredicate::MaxLenPredicate(const DigitalPath& path, std::int64_t k) : Predicate(path), k_(k) {
    if (k < 1) throw InputError("max_len: k must be >= 1");
}

bool MaxLenPredicate::holds(const IndexInterval& iv) const { return static_cast<std::int64_t>(iv.len) <= k_; }

namespace {

class MaxLenRecognizer final : public Recognizer {
  public:
    MaxLenRecognizer(const DigitalPath& path, std::int64_t k) : Recognizer(path), k_(k) {}

  protected:
    bool start_at(std::size_t) override { return k_ >= 1; }
    bool push_back(std::size_t) override { return fits_one_more(); }
    bool push_front(std::size_t) override { return fits_one_more(); }
    void pop_front(std::size_t) override {}

  private:
    bool fits_one_more() const { return static_cast<std::int64_t>(interval().len) + 1 <= k_; }
    std::int64_t k_;
};

}  // namespace

std::unique_ptr<Recognizer> MaxLenPredicate::make_recognizer() const {
    return std::make_unique<MaxLenRecognizer>(path(), k_);
}

// ---------------------------------------------------------------------------
// x_monotone / y_monotone

namespace {

int step_sign(const GridPoint& from, const GridPoint& to, Axis axis) {
    const std::int64_t d = axis == Axis::X ? to.x - from.x : to.y - from.y;
    return (d > 0) - (d < 0);
}

class MonotoneRecognizer final : public Recognizer {
  public:
    MonotoneRecognizer(const DigitalPath& path, Axis axis) : Recognizer(path), axis_(axis) {}

  protected:
    bool start_at(std::size_t) override {
        rising_ = falling_ = 0;
        return true;
    }

    bool push_back(std::size_t index) override {
        const IndexInterval iv = interval();
        const std::size_t n = path().size();
        const std::size_t last = interval_last(iv, n);
        Counts next{rising_, falling_};
        next.add(step_sign(path()[last], path()[index], axis_));
        if (path().closed && iv.len + 1 == n) next.add(step_sign(path()[index], path()[iv.start], axis_));
        return commit(next);
    }

    bool push_front(std::size_t index) override {
        const IndexInterval iv = interval();
        const std::size_t n = path().size();
        Counts next{rising_, falling_};
        next.add(step_sign(path()[index], path()[iv.start], axis_));
        if (path().closed && iv.len + 1 == n) next.add(step_sign(path()[interval_last(iv, n)], path()[index], axis_));
        return commit(next);
    }

    void pop_front(std::size_t index) override {
        const IndexInterval iv = interval();
        const std::size_t n = path().size();
        Counts next{rising_, falling_};
        if (iv.len >= 2) next.remove(step_sign(path()[index], path()[(index + 1) % n], axis_));
        if (path().closed && iv.len == n) next.remove(step_sign(path()[interval_last(iv, n)], path()[index], axis_));
        rising_ = next.rising;
        falling_ = next.falling;
    }

  private:
    struct Counts {
        std::size_t rising;
        std::size_t falling;
        void add(int sign) {
            if (sign > 0) ++rising;
            if (sign < 0) ++falling;
        }
        void remove(int sign) {
            if (sign > 0) --rising;
            if (sign < 0) --falling;
        }
    };

    bool commit(const Counts& next) {
        if (next.rising > 0 && next.falling > 0) return false;
        rising_ = next.rising;
        falling_ = next.falling;
        return true;
    }

    Axis axis_;
    std::size_t rising_ = 0;
    std::size_t falling_ = 0;
};

}  // namespace

MonotonePredicate::MonotonePredicate(const DigitalPath& path, Axis axis) : Predicate(path), axis_(axis) {}

bool MonotonePredicate::holds(const IndexInterval& iv) const {
    const std::size_t n = path().size();
    bool rising = false;
    bool falling = false;
    const std::size_t steps = (path().closed && iv.len == n) ? n : iv.len - 1;
    for (std::size_t k = 0; k < steps; ++k) {
        const int s = step_sign(path()[interval_index(iv, k, n)], path()[interval_index(iv, k + 1, n)], axis_);
        rising |= s > 0;
        falling |= s < 0;
        if (rising && falling) return false;
    }
    return true;
}

std::unique_ptr<Recognizer> MonotonePredicate::make_recognizer() const {
    return std::make_unique<MonotoneRecognizer>(path(), axis_);
}

// ---------------------------------------------------------------------------
// bbox

namespace {

struct Box {
    std::int64_t min_x = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_x = std::numeric_limits<std::int64_t>::min();
    std::int64_t min_y = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_y = std::numeric_limits<std::int64_t>::min();

    void add(const GridPoint& p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    bool fits(std::int64_t w, std::int64_t h) const { return max_x - min_x + 1 <= w && max_y - min_y + 1 <= h; }
};

class BoundingBoxRecognizer final : public Recognizer {
  public:
    BoundingBoxRecognizer(const DigitalPath& path, std::int64_t w, std::int64_t h)
        : Recognizer(path), width_(w), height_(h) {}

  protected:
    bool start_at(std::size_t index) override {
        box_ = Box{};
        box_.add(path()[index]);
        return box_.fits(width_, height_);
    }
    bool push_back(std::size_t index) override { return try_add(index); }
    bool push_front(std::size_t index) override { return try_add(index); }
    void pop_front(std::size_t index) override {
        const IndexInterval iv = interval();
        const std::size_t n = path().size();
        box_ = Box{};
        for (std::size_t k = 1; k < iv.len; ++k) box_.add(path()[(index + k) % n]);
    }

  private:
    bool try_add(std::size_t index) {
        Box next = box_;
        next.add(path()[index]);
        if (!next.fits(width_, height_)) return false;
        box_ = next;
        return true;
    }

    std::int64_t width_;
    std::int64_t height_;
    Box box_;
};

}  // namespace

BoundingBoxPredicate::BoundingBoxPredicate(const DigitalPath& path, std::int64_t width, std::int64_t height)
    : Predicate(path), width_(width), height_(height) {
    if (width < 1 || height < 1) throw InputError("bbox: w and h must be >= 1");
}

bool BoundingBoxPredicate::holds(const IndexInterval& iv) const {
    Box box;
    const std::size_t n = path().size();
    for (std::size_t k = 0; k < iv.len; ++k) {
        box.add(path()[interval_index(iv, k, n)]);
        if (!box.fits(width_, height_)) return false;
    }
    return true;
}

std::unique_ptr<Recognizer> BoundingBoxPredicate::make_recognizer() const {
    return std::make_unique<BoundingBoxRecognizer>(path(), width_, height_);
}

// ---------------------------------------------------------------------------
// contains_p0

bool ContainsFirstPredicate::holds(const IndexInterval& iv) const {
    const std::size_t n = path().size();
    if (iv.start == 0) return true;
    return path().closed && iv.start + iv.len > n;
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<PredicateInfo>& registered_predicates() {
    static const std::vector<PredicateInfo> registry = {
        {"dss", "digital straight segment (arithmetic naive/standard line)", {}, true},
        {"max_len", "at most k points", {"k"}, true},
        {"x_monotone", "x never both increases and decreases", {}, true},
        {"y_monotone", "y never both increases and decreases", {}, true},
        {"bbox", "points fit in a w x h box", {"w", "h"}, true},
        {"contains_p0", "contains index 0 (NOT conservative; diagnostics only)", {}, false},
    };
    return registry;
}

namespace {

std::int64_t required_param(const PredicateSpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end()) throw InputError("predicate " + spec.name + ": missing parameter " + key);
    return it->second;
}

}  // namespace

std::shared_ptr<const Predicate> make_predicate(const PredicateSpec& spec, const DigitalPath& path) {
    const auto& registry = registered_predicates();
    const auto info = std::find_if(registry.begin(), registry.end(),
                                   [&](const PredicateInfo& p) { return p.name == spec.name; });
    if (info == registry.end()) throw InputError("unknown predicate \"" + spec.name + "\"");
    for (const auto& [key, value] : spec.params) {
        if (std::find(info->params.begin(), info->params.end(), key) == info->params.end()) {
            throw InputError("predicate " + spec.name + ": unexpected parameter " + key);
        }
    }

    if (spec.name == "dss") return std::make_shared<DssPredicate>(path);
    if (spec.name == "max_len") return std::make_shared<MaxLenPredicate>(path, required_param(spec, "k"));
    if (spec.name == "x_monotone") return std::make_shared<MonotonePredicate>(path, Axis::X);
    if (spec.name == "y_monotone") return std::make_shared<MonotonePredicate>(path, Axis::Y);
    if (spec.name == "bbox") {
        return std::make_shared<BoundingBoxPredicate>(path, required_param(spec, "w"), required_param(spec, "h"));
    }
    return std::make_shared<ContainsFirstPredicate>(path);
}

std::unique_ptr<Recognizer> make_recognizer(const PredicateSpec& spec, const DigitalPath& path) {
    auto predicate = make_predicate(spec, path);
    auto recognizer = predicate->make_recognizer();
    // Shipped incremental recognizers copy what they need; the fallback one
    // holds its own reference to the predicate.
    return recognizer;
}

// ---------------------------------------------------------------------------
// Conservativity check

ConservativityReport check_conservative(const PredicateSpec& spec, const std::vector<DigitalPath>& paths,
                                        std::size_t trials, std::uint64_t seed) {
    ConservativityReport report;
    if (paths.empty()) return report;

    std::vector<std::shared_ptr<const Predicate>> predicates;
    predicates.reserve(paths.size());
    for (const auto& p : paths) predicates.push_back(make_predicate(spec, p));

    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {  // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    for (report.trials = 0; report.trials < trials;) {
        ++report.trials;
        const std::size_t which = uniform(0, paths.size() - 1);
        const DigitalPath& path = paths[which];
        const Predicate& predicate = *predicates[which];
        const std::size_t n = path.size();

        IndexInterval outer{uniform(0, n - 1), 1};
        outer.len = uniform(1, path.closed ? n : n - outer.start);
        // Halve until the predicate accepts, so that long true intervals are
        // still sampled on predicates that reject most of the path.
        while (outer.len > 0 && !predicate.holds(outer)) outer.len /= 2;
        if (outer.len == 0) continue;
        ++report.accepted_outer;

        IndexInterval inner;
        const std::size_t offset = uniform(0, outer.len - 1);
        inner.start = (outer.start + offset) % n;
        inner.len = uniform(1, outer.len - offset);
        if (!predicate.holds(inner)) {
            report.counterexample = ConservativityReport::Counterexample{which, outer, inner};
            break;
        }
    }
    return report;
}

}  // namespace tcover
