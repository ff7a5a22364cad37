#include "tiercomb/path_enumeration.hpp"

#include <stdexcept>

namespace tiercomb {

namespace {

class PathEnumerator {
public:
    PathEnumerator(int n, int max_label, PathFilter filter,
                   const std::function<void(const LabelledDyckPath2&)>& visit)
        : n_(n), max_label_(max_label), filter_(filter), visit_(visit) {
        if (n_ < 0) throw std::invalid_argument("path size must be >= 0");
        if (max_label_ < 1) throw std::invalid_argument("label bound must be >= 1");
        pix_.resize(n_);
        piy_.resize(n_);
        cols_.resize(n_);
    }

    void run() {
        if (n_ == 0) {
            visit_(LabelledDyckPath2{});
            return;
        }
        if (filter_ == PathFilter::AreaZero) {
            // area 0 means the staircase word; go through sequence pairs
            steps_.clear();
            for (int i = 0; i < n_; ++i) steps_ += "NE";
            for (int i = 0; i < n_; ++i) cols_[i] = i;
            assign_pix(0);
            return;
        }
        steps_.clear();
        build_word(0, 0);
    }

private:
    void build_word(int north, int east) {
        if (north == n_ && east == n_) {
            int e = 0, i = 0;
            for (char c : steps_) {
                if (c == 'N') cols_[i++] = e;
                else ++e;
            }
            assign_pix(0);
            return;
        }
        // N before E keeps the word stream in the canonical letter order
        if (north < n_) {
            steps_ += 'N';
            build_word(north + 1, east);
            steps_.pop_back();
        }
        if (east < north) {
            steps_ += 'E';
            build_word(north, east + 1);
            steps_.pop_back();
        }
    }

    void assign_pix(int i) {
        if (i == n_) {
            assign_piy(0);
            return;
        }
        for (int x = 1; x <= max_label_; ++x) {
            // rows without an east step force both labels up; the left one
            // is already decidable here
            if (i > 0 && cols_[i] == cols_[i - 1] && x <= pix_[i - 1]) continue;
            pix_[i] = x;
            assign_pix(i + 1);
        }
    }

    void assign_piy(int i) {
        if (i == n_) {
            visit_(LabelledDyckPath2{steps_, pix_, piy_});
            return;
        }
        for (int y = 1; y <= max_label_; ++y) {
            if (i > 0) {
                const int east = cols_[i] - cols_[i - 1];
                const int need =
                    (pix_[i] <= pix_[i - 1] ? 1 : 0) + (y <= piy_[i - 1] ? 1 : 0);
                if (east < need) continue;
            }
            piy_[i] = y;
            assign_piy(i + 1);
        }
    }

    const int n_;
    const int max_label_;
    const PathFilter filter_;
    const std::function<void(const LabelledDyckPath2&)>& visit_;
    std::string steps_;
    std::vector<int> pix_, piy_;
    std::vector<int> cols_;
};

}  // namespace

void enumerate_paths(int n, int max_label, PathFilter filter,
                     const std::function<void(const LabelledDyckPath2&)>& visit) {
    PathEnumerator(n, max_label, filter, visit).run();
}

std::vector<LabelledDyckPath2> collect_paths(int n, int max_label, PathFilter filter) {
    std::vector<LabelledDyckPath2> out;
    enumerate_paths(n, max_label, filter,
                    [&out](const LabelledDyckPath2& p) { out.push_back(p); });
    return out;
}

long long count_paths(int n, int max_label, PathFilter filter) {
    long long count = 0;
    enumerate_paths(n, max_label, filter, [&count](const LabelledDyckPath2&) { ++count; });
    return count;
}

}  // namespace tiercomb
