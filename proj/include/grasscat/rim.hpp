#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grasscat {

// Reduce any integer to the label range [1, n]; vertex 0 is n.
inline int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

// A k-subset of Z_n, stored sorted in [1, n].
class Rim {
public:
    Rim() = default;
    Rim(int n, const std::vector<int>& elements);
    static Rim from_mask(int n, std::uint64_t mask);

    int n() const { return n_; }
    int k() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(int i) const { return (mask_ >> (wrap(i, n_) - 1)) & 1; }

    // "145" when n < 10, otherwise "1,4,5".
    std::string str() const;

    friend bool operator==(const Rim& a, const Rim& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }
    friend bool operator!=(const Rim& a, const Rim& b) { return !(a == b); }
    friend bool operator<(const Rim& a, const Rim& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.elems_ < b.elems_;
    }

private:
    int n_ = 0;
    std::vector<int> elems_;
    std::uint64_t mask_ = 0;
};

struct Interval {
    int start;
    int length;
};

struct SlopeData {
    std::vector<Interval> down;  // runs of elements
    std::vector<Interval> up;    // runs of non-elements
    int min_slope = 0;
};

struct PairClass {
    int intersection_size = 0;
    int interlacing_degree = 0;
    bool crossing = false;
    bool tight = false;
    std::string poset;  // "(1^r,2)" when r >= 1
};

struct ARMiddle {
    bool split = false;  // j == i + 2: middle is P_i (+) L_U
    Rim X, Y;            // quotient X, sub Y, when not split
    int projective = 0;
    Rim U;
};

std::vector<Rim> all_rims(int k, int n);

std::vector<int> peaks(const Rim& r);
SlopeData slopes(const Rim& r);
Rim shift(const Rim& r, int m);
std::optional<int> is_projective(const Rim& r);
Rim projective_rim(int j, int k, int n);
std::optional<std::pair<int, int>> is_almost_consecutive(const Rim& r);
Rim syzygy_rim(const Rim& r);
bool crossing(const Rim& a, const Rim& b);
int interlacing_degree(const Rim& a, const Rim& b);
PairClass classify_pair(const Rim& a, const Rim& b);
ARMiddle ar_middle_profile(const Rim& r);

// Text forms: "145@(3,8)", "1,4,5@(3,8)", or bare "145" when n is supplied.
Rim parse_rim(const std::string& text, int n_hint = 0);
std::pair<int, int> parse_ambient(const std::string& text);  // "(k,n)" suffix, or {0,0}

}  // namespace grasscat
