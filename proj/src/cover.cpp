#include "tcover/cover.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <random>

#include "json.hpp"
#include "tcover/error.hpp"
#include "tcover/generators.hpp"

namespace tcover {

namespace {

using Unwrapped = std::int64_t;

/// Drives one recognizer along the path, tracking the start of the current
/// interval without reducing it modulo the path size so that laps around a
/// closed path stay ordered.
class Sweep {
  public:
    Sweep(const DigitalPath& path, const Predicate& predicate)
        : path_(path), predicate_(predicate), recognizer_(predicate.make_recognizer()),
          size_(static_cast<Unwrapped>(path.size())) {}

    Unwrapped size() const { return size_; }
    Unwrapped start() const { return start_; }
    Unwrapped len() const { return static_cast<Unwrapped>(recognizer_->interval().len); }
    Unwrapped end() const { return start_ + len() - 1; }

    std::size_t wrap(Unwrapped i) const { return static_cast<std::size_t>(((i % size_) + size_) % size_); }

    bool reset(Unwrapped i) {
        if (!recognizer_->reset(wrap(i))) return false;
        start_ = i;
        return true;
    }

    bool singleton_holds(Unwrapped i) {
        ++stateless_calls_;
        return predicate_.holds({wrap(i), 1});
    }

    bool extend_positive() { return recognizer_->try_extend_positive(); }

    bool extend_negative() {
        if (!recognizer_->try_extend_negative()) return false;
        --start_;
        return true;
    }

    /// Increase / Check / Maximality: alternate additions around the
    /// current middle (positive side when the interval is symmetric, i.e.
    /// of odd length), and once one side is rejected keep growing the other.
    void grow_around_middle() {
        bool positive_open = true;
        bool negative_open = true;
        while (positive_open && negative_open) {
            if (len() % 2 == 1) {
                positive_open = extend_positive();
            } else {
                negative_open = extend_negative();
            }
        }
        while (positive_open && extend_positive()) {
        }
        while (negative_open && extend_negative()) {
        }
    }

    void grow_forward() {
        while (extend_positive()) {
        }
    }

    /// Restart: the current interval [i, j] cannot take p_{j+1}. Drops
    /// points from the negative side until [i', j+1] holds. The caller has
    /// already checked that {p_{j+1}} alone holds.
    void slide_past_end() {
        const Unwrapped next = end() + 1;
        for (;;) {
            recognizer_->remove_negative_end();
            ++start_;
            if (recognizer_->empty()) {
                reset(next);
                return;
            }
            if (extend_positive()) return;
        }
    }

    /// Init: first index in [from, limit) whose singleton holds, or limit.
    Unwrapped scan_from(Unwrapped from, Unwrapped limit) {
        for (Unwrapped q = from; q < limit; ++q) {
            if (reset(q)) return q;
        }
        return limit;
    }

    IndexInterval current() const {
        return canonical({wrap(start_), static_cast<std::size_t>(len())}, path_.size(), path_.closed);
    }

    std::uint64_t calls() const { return recognizer_->evaluations() + stateless_calls_; }

  private:
    const DigitalPath& path_;
    const Predicate& predicate_;
    std::unique_ptr<Recognizer> recognizer_;
    Unwrapped size_;
    Unwrapped start_ = 0;
    std::uint64_t stateless_calls_ = 0;
};

void finish(SaturatedCover& cover) {
    std::sort(cover.segments.begin(), cover.segments.end());
    cover.segments.erase(std::unique(cover.segments.begin(), cover.segments.end()), cover.segments.end());
}

SaturatedCover run_sweep(const DigitalPath& path, const Predicate& predicate, bool forward_only) {
    SaturatedCover cover;
    cover.points = path.size();
    cover.closed = path.closed;
    if (path.points.empty()) return cover;

    Sweep sweep(path, predicate);
    const Unwrapped n = sweep.size();

    if (sweep.scan_from(0, n) == n) {
        cover.predicate_calls = sweep.calls();
        return cover;
    }
    if (forward_only) {
        sweep.grow_forward();
    } else {
        sweep.grow_around_middle();
    }
    if (path.closed && sweep.len() == n) {
        cover.segments.push_back(sweep.current());
        cover.predicate_calls = sweep.calls();
        return cover;
    }

    const Unwrapped first_start = sweep.start();
    const Unwrapped first_end = sweep.end();
    // The forward variant cannot tell yet whether its first segment extends
    // to the negative side; it is only kept if the sweep meets it again.
    if (!forward_only || !path.closed) cover.segments.push_back(sweep.current());

    // Closed paths: SSD stops when it comes back to the first start; the
    // forward variant stops once it has passed the first end again.
    const Unwrapped start_limit = first_start + n;
    const Unwrapped end_limit = first_end + n;
    auto done_with = [&](Unwrapped start) { return path.closed && !forward_only && start >= start_limit; };

    for (;;) {
        const Unwrapped next = sweep.end() + 1;
        if (!path.closed && next >= n) break;

        if (sweep.singleton_holds(next)) {
            sweep.slide_past_end();
        } else {
            const Unwrapped limit = path.closed ? first_start + 2 * n : n;
            const Unwrapped q = sweep.scan_from(next + 1, limit);
            if (q == limit) break;
        }
        if (done_with(sweep.start())) break;

        if (forward_only) {
            sweep.grow_forward();
        } else {
            sweep.grow_around_middle();
        }
        cover.segments.push_back(sweep.current());
        if (path.closed && forward_only && sweep.end() >= end_limit) break;
    }

    finish(cover);
    cover.predicate_calls = sweep.calls();
    return cover;
}

std::uint64_t brute_force_filter(const DigitalPath& path, const Predicate& predicate, SaturatedCover& cover) {
    const std::size_t n = path.size();
    std::uint64_t calls = 0;
    std::vector<IndexInterval> accepted;
    bool full_turn = false;
    enumerate_subpaths(n, path.closed, [&](const IndexInterval& iv) {
        ++calls;
        if (!predicate.holds(iv)) return;
        if (path.closed && iv.len == n) {
            full_turn = true;
        } else {
            accepted.push_back(iv);
        }
    });
    if (full_turn) {
        // Every sub-path is contained in the full turn.
        cover.segments.push_back({0, n});
        return calls;
    }

    // X is contained in another accepted Y iff some copy of Y (shifted back
    // one lap on closed paths) starts no later and ends no earlier. Sorting
    // by start, longest first, turns that into a running maximum of ends.
    struct Entry {
        Unwrapped start;
        Unwrapped end;
        bool original;
    };
    std::vector<Entry> entries;
    entries.reserve(accepted.size() * 2);
    for (const auto& iv : accepted) {
        const auto s = static_cast<Unwrapped>(iv.start);
        const auto e = s + static_cast<Unwrapped>(iv.len) - 1;
        entries.push_back({s, e, true});
        if (path.closed) entries.push_back({s - static_cast<Unwrapped>(n), e - static_cast<Unwrapped>(n), false});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end > b.end;
        return a.original < b.original;
    });
    Unwrapped furthest = std::numeric_limits<Unwrapped>::min();
    for (const auto& entry : entries) {
        if (entry.original && furthest < entry.end) {
            cover.segments.push_back({static_cast<std::size_t>(entry.start),
                                      static_cast<std::size_t>(entry.end - entry.start + 1)});
        }
        furthest = std::max(furthest, entry.end);
    }
    std::sort(cover.segments.begin(), cover.segments.end());
    return calls;
}

}  // namespace

SaturatedCover ssd_cover(const DigitalPath& path, const Predicate& predicate) {
    return run_sweep(path, predicate, false);
}

SaturatedCover ssd_cover(const DigitalPath& path, const PredicateSpec& spec) {
    auto cover = ssd_cover(path, *make_predicate(spec, path));
    cover.predicate = spec;
    return cover;
}

SaturatedCover forward_cover(const DigitalPath& path, const Predicate& predicate) {
    return run_sweep(path, predicate, true);
}

SaturatedCover forward_cover(const DigitalPath& path, const PredicateSpec& spec) {
    auto cover = forward_cover(path, *make_predicate(spec, path));
    cover.predicate = spec;
    return cover;
}

SaturatedCover brute_force_cover(const DigitalPath& path, const Predicate& predicate, std::size_t cap) {
    if (path.size() > cap) {
        throw CapacityError("brute_force_cover: " + std::to_string(path.size()) + " points exceeds the cap of " +
                            std::to_string(cap));
    }
    SaturatedCover cover;
    cover.points = path.size();
    cover.closed = path.closed;
    cover.predicate_calls = brute_force_filter(path, predicate, cover);
    return cover;
}

SaturatedCover brute_force_cover(const DigitalPath& path, const PredicateSpec& spec, std::size_t cap) {
    if (path.size() > cap) {
        throw CapacityError("brute_force_cover: " + std::to_string(path.size()) + " points exceeds the cap of " +
                            std::to_string(cap));
    }
    auto cover = brute_force_cover(path, *make_predicate(spec, path), cap);
    cover.predicate = spec;
    return cover;
}

std::string cover_to_json(const SaturatedCover& cover) {
    std::string out = "{\"n\": " + std::to_string(cover.points);
    out += ", \"closed\": ";
    out += cover.closed ? "true" : "false";
    out += ", \"predicate\": " + predicate_spec_to_json(cover.predicate);
    out += ", \"segments\": [";
    for (std::size_t i = 0; i < cover.segments.size(); ++i) {
        if (i) out += ", ";
        out += "{\"start\": " + std::to_string(cover.segments[i].start) +
               ", \"len\": " + std::to_string(cover.segments[i].len) + "}";
    }
    out += "], \"predicate_calls\": " + std::to_string(cover.predicate_calls) + "}";
    return out;
}

SaturatedCover cover_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        SaturatedCover cover;
        cover.points = doc.at("n").get<std::size_t>();
        cover.closed = doc.at("closed").get<bool>();
        cover.predicate = predicate_spec_from_json(doc.at("predicate").dump());
        for (const auto& s : doc.at("segments")) {
            const IndexInterval iv{s.at("start").get<std::size_t>(), s.at("len").get<std::size_t>()};
            if (!is_valid_interval(iv, cover.points, cover.closed)) {
                throw InputError("cover JSON: segment " + to_string(iv) + " is not valid for the path");
            }
            cover.segments.push_back(iv);
        }
        cover.predicate_calls = doc.at("predicate_calls").get<std::uint64_t>();
        return cover;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("cover JSON: ") + e.what());
    }
}

std::vector<ProbeRow> complexity_probe(const PredicateSpec& spec, const std::vector<std::size_t>& sizes,
                                       ProbeShape shape, std::uint64_t seed) {
    std::vector<ProbeRow> rows;
    std::mt19937_64 rng(seed);
    for (std::size_t requested : sizes) {
        DigitalPath path;
        switch (shape) {
            case ProbeShape::Circle: path = digitized_circle_with_points(requested); break;
            case ProbeShape::Line: path = digitized_line(std::max<std::size_t>(requested, 1), 2, 5, 1); break;
            case ProbeShape::Walk: path = random_walk(std::max<std::size_t>(requested, 1), Adjacency::Eight, rng); break;
        }
        const auto begin = std::chrono::steady_clock::now();
        const auto cover = ssd_cover(path, spec);
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
        rows.push_back({requested, path.size(), cover.predicate_calls, cover.segments.size(), elapsed});
    }
    return rows;
}

double calls_ratio_spread(const std::vector<ProbeRow>& rows) {
    if (rows.empty()) return 1.0;
    double lo = rows.front().calls_per_point();
    double hi = lo;
    for (const auto& r : rows) {
        lo = std::min(lo, r.calls_per_point());
        hi = std::max(hi, r.calls_per_point());
    }
    return hi / lo;
}

}  // namespace tcover
