#include "biarc/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace biarc {

TIntervalSet::TIntervalSet(std::initializer_list<TInterval> items)
    : TIntervalSet(std::span<const TInterval>(items.begin(), items.size())) {}

TIntervalSet::TIntervalSet(std::span<const TInterval> items) {
    for (const TInterval& it : items) {
        if (std::isnan(it.lo) || std::isnan(it.hi)) {
            throw std::invalid_argument("interval endpoint is NaN");
        }
        if (it.lo <= it.hi) items_.push_back(it);
    }
    canonicalize();
}

void TIntervalSet::canonicalize() {
    if (items_.empty()) return;
    std::sort(items_.begin(), items_.end(),
              [](const TInterval& a, const TInterval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    Storage merged;
    for (const TInterval& it : items_) {
        if (!merged.empty() && it.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, it.hi);
        } else {
            merged.push_back(it);
        }
    }
    const bool has_neg = merged.front().lo == -kInf;
    const bool has_pos = merged.back().hi == kInf;
    if (has_neg && !has_pos) merged.push_back({kInf, kInf});
    if (has_pos && !has_neg) merged.insert(merged.begin(), TInterval{-kInf, -kInf});
    items_ = std::move(merged);
}

bool TIntervalSet::contains(double t) const {
    return std::any_of(items_.begin(), items_.end(),
                       [t](const TInterval& it) { return it.lo <= t && t <= it.hi; });
}

bool TIntervalSet::is_all() const {
    return items_.size() == 1 && items_[0].lo == -kInf && items_[0].hi == kInf;
}

TIntervalSet TIntervalSet::unite(const TIntervalSet& o) const {
    Storage all(items_.begin(), items_.end());
    all.insert(all.end(), o.items_.begin(), o.items_.end());
    return TIntervalSet(std::span<const TInterval>(all.data(), all.size()));
}

TIntervalSet TIntervalSet::intersect(const TIntervalSet& o) const {
    Storage out;
    std::size_t i = 0, j = 0;
    while (i < items_.size() && j < o.items_.size()) {
        const double lo = std::max(items_[i].lo, o.items_[j].lo);
        const double hi = std::min(items_[i].hi, o.items_[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (items_[i].hi < o.items_[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return TIntervalSet(std::span<const TInterval>(out.data(), out.size()));
}

bool TIntervalSet::intersects(const TIntervalSet& o, double gap) const {
    std::size_t i = 0, j = 0;
    while (i < items_.size() && j < o.items_.size()) {
        const double lo = std::max(items_[i].lo, o.items_[j].lo);
        const double hi = std::min(items_[i].hi, o.items_[j].hi);
        if (lo <= hi || lo - hi <= gap) return true;
        if (items_[i].hi < o.items_[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const TIntervalSet& s) {
    if (s.empty()) return os << "{}";
    bool first = true;
    for (const TInterval& it : s.intervals()) {
        if (!first) os << " U ";
        first = false;
        os << '[' << it.lo << ", " << it.hi << ']';
    }
    return os;
}

}  // namespace biarc
