#include "uglmn/superindex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace uglmn {

namespace {

void check_index(int i, const Profile& p, const char* what) {
    if (i < 1 || i > p.size()) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) +
                                " outside [1, " + std::to_string(p.size()) + "]");
    }
}

void check_root_index(int h, const Profile& p, const char* what) {
    if (h < 1 || h >= p.size()) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(h) +
                                " outside [1, " + std::to_string(p.size() - 1) + "]");
    }
}

}  // namespace

void validate_profile(const Profile& p) {
    if (p.m < 0 || p.n < 0 || p.m + p.n <= 0) {
        throw std::invalid_argument("profile requires m, n >= 0 and m + n > 0");
    }
}

int parity_hat(int i, const Profile& p) {
    check_index(i, p, "parity_hat");
    return i <= p.m ? 0 : 1;
}

int v_exponent(int h, int e, const Profile& p) { return parity_hat(h, p) == 0 ? e : -e; }

VFunc v_sub(int h, int e, const Profile& p) { return VFunc::v_power(v_exponent(h, e, p)); }

long super_dot(std::span<const int> a, std::span<const int> b, const Profile& p) {
    if (a.size() != b.size() || static_cast<int>(a.size()) != p.size()) {
        throw std::invalid_argument("super_dot: length mismatch");
    }
    long s = 0;
    for (int i = 0; i < p.size(); ++i) {
        long term = static_cast<long>(a[i]) * b[i];
        s += (i < p.m) ? term : -term;
    }
    return s;
}

IntVector unit_vector(int i, const Profile& p) {
    check_index(i, p, "unit_vector");
    IntVector e(static_cast<std::size_t>(p.size()), 0);
    e[i - 1] = 1;
    return e;
}

IntVector alpha(int h, const Profile& p) {
    check_root_index(h, p, "alpha");
    IntVector e(static_cast<std::size_t>(p.size()), 0);
    e[h - 1] = 1;
    e[h] = -1;
    return e;
}

IntVector beta(int h, const Profile& p) {
    check_root_index(h, p, "beta");
    IntVector e(static_cast<std::size_t>(p.size()), 0);
    e[h - 1] = 1;
    e[h] = 1;
    return e;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// ---------------------------------------------------------------- SuperMatrix

SuperMatrix::SuperMatrix(Profile p) : profile_(p) {
    validate_profile(p);
    entries_.assign(static_cast<std::size_t>(p.size() * p.size()), 0);
}

SuperMatrix::SuperMatrix(Profile p, std::vector<int> entries)
    : profile_(p), entries_(std::move(entries)) {
    validate_profile(p);
    if (entries_.size() != static_cast<std::size_t>(p.size() * p.size())) {
        throw std::invalid_argument("SuperMatrix: expected " + std::to_string(p.size() * p.size()) +
                                    " entries");
    }
    validate();
}

SuperMatrix::SuperMatrix(Profile p, const std::vector<std::vector<int>>& rows) : profile_(p) {
    validate_profile(p);
    if (rows.size() != static_cast<std::size_t>(p.size())) {
        throw std::invalid_argument("SuperMatrix: wrong number of rows");
    }
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(p.size())) {
            throw std::invalid_argument("SuperMatrix: wrong row length");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    validate();
}

SuperMatrix SuperMatrix::unit(Profile p, int i, int j, int count) {
    SuperMatrix a(p);
    check_index(i, p, "SuperMatrix::unit");
    check_index(j, p, "SuperMatrix::unit");
    a.entries_[a.index(i, j)] = count;
    a.validate();
    return a;
}

SuperMatrix SuperMatrix::diagonal(Profile p, std::span<const int> lambda) {
    return SuperMatrix(p).plus_diagonal(lambda);
}

std::size_t SuperMatrix::index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * profile_.size() + (j - 1));
}

void SuperMatrix::validate() const {
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int x = entries_[index(i, j)];
            if (x < 0) throw std::invalid_argument("SuperMatrix: negative entry");
            if (x > 1 && is_odd_slot(i, j)) {
                throw std::invalid_argument("SuperMatrix: entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") must be 0 or 1");
            }
        }
    }
}

bool SuperMatrix::is_odd_slot(int i, int j) const { return (i <= profile_.m) != (j <= profile_.m); }

bool SuperMatrix::is_off_diagonal() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i, i) != 0) return false;
    }
    return true;
}

long SuperMatrix::total() const {
    long s = 0;
    for (int x : entries_) s += x;
    return s;
}

long SuperMatrix::row_sum(int i) const {
    check_index(i, profile_, "row_sum");
    long s = 0;
    for (int j = 1; j <= size(); ++j) s += (*this)(i, j);
    return s;
}

long SuperMatrix::column_sum(int j) const {
    check_index(j, profile_, "column_sum");
    long s = 0;
    for (int i = 1; i <= size(); ++i) s += (*this)(i, j);
    return s;
}

IntVector SuperMatrix::diagonal_entries() const {
    IntVector d;
    for (int i = 1; i <= size(); ++i) d.push_back((*this)(i, i));
    return d;
}

SuperMatrix SuperMatrix::without_diagonal() const {
    SuperMatrix r = *this;
    for (int i = 1; i <= size(); ++i) r.entries_[index(i, i)] = 0;
    return r;
}

std::optional<SuperMatrix> SuperMatrix::shifted(int i, int j, int delta) const {
    check_index(i, profile_, "SuperMatrix::shifted");
    check_index(j, profile_, "SuperMatrix::shifted");
    int x = (*this)(i, j) + delta;
    if (x < 0 || (x > 1 && is_odd_slot(i, j))) return std::nullopt;
    SuperMatrix r = *this;
    r.entries_[index(i, j)] = x;
    return r;
}

SuperMatrix SuperMatrix::plus_diagonal(std::span<const int> lambda) const {
    if (static_cast<int>(lambda.size()) != size()) {
        throw std::invalid_argument("plus_diagonal: length mismatch");
    }
    SuperMatrix r = *this;
    for (int i = 1; i <= size(); ++i) r.entries_[index(i, i)] += lambda[i - 1];
    r.validate();
    return r;
}

std::strong_ordering operator<=>(const SuperMatrix& a, const SuperMatrix& b) {
    if (auto c = a.profile_ <=> b.profile_; c != 0) return c;
    return a.entries_ <=> b.entries_;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.profile() != b.profile()) throw std::invalid_argument("SuperMatrix +: profile mismatch");
    std::vector<int> e(a.entries());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
    return SuperMatrix(a.profile(), std::move(e));
}

std::string SuperMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) os << ';';
        for (int j = 1; j <= size(); ++j) {
            if (j > 1) os << ',';
            os << (*this)(i, j);
        }
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream cs(text);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(cell, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " entry '" + cell + "'");
        }
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(std::string("bad ") + what + " entry '" + cell + "'");
        out.push_back(x);
    }
    return out;
}

}  // namespace

SuperMatrix SuperMatrix::parse(Profile p, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) rows.push_back(parse_int_list(row, "matrix"));
    return SuperMatrix(p, rows);
}

IntVector parse_vector(const Profile& p, const std::string& text) {
    IntVector v = parse_int_list(text, "vector");
    if (static_cast<int>(v.size()) != p.size()) {
        throw std::invalid_argument("vector '" + text + "' must have " + std::to_string(p.size()) + " entries");
    }
    return v;
}

// ---------------------------------------------------------------- statistics

int matrix_parity(const SuperMatrix& a) {
    long s = 0;
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            if (a.is_odd_slot(i, j)) s += a(i, j);
        }
    }
    return static_cast<int>(s % 2);
}

long sigma(int i, const SuperMatrix& a) {
    const Profile& p = a.profile();
    check_index(i, p, "sigma");
    const int n = p.size();
    const int m = p.m;
    long s = 0;
    if (i <= m) {
        for (int r = m + 1; r <= n; ++r)
            for (int t = 1; t < i; ++t) s += a(r, t);
        return s;
    }
    for (int r = m + 1; r <= n; ++r)
        for (int t = 1; t <= m; ++t) s += a(r, t);
    for (int r = 1; r <= m; ++r)
        for (int t = m + 1; t < i; ++t) s += a(r, t);
    return s;
}

long f_stat(int h, int i, const SuperMatrix& a) {
    const Profile& p = a.profile();
    check_root_index(h, p, "f_stat");
    check_index(i, p, "f_stat");
    long top = 0;
    long bottom = 0;
    for (int j = i + 1; j <= p.size(); ++j) {
        top += a(h, j);
        bottom += a(h + 1, j);
    }
    return h == p.m ? top + bottom : top - bottom;
}

long g_stat(int h, int i, const SuperMatrix& a) {
    const Profile& p = a.profile();
    check_root_index(h, p, "g_stat");
    check_index(i, p, "g_stat");
    long lower = 0;
    long upper = 0;
    for (int j = 1; j < i; ++j) {
        lower += a(h + 1, j);
        upper += a(h, j);
    }
    return h == p.m ? lower + upper : lower - upper;
}

long sigma_hm(int h, int i, const SuperMatrix& a) {
    check_root_index(h, a.profile(), "sigma_hm");
    return h == a.profile().m ? sigma(i, a) : 0;
}

long a_bar(const SuperMatrix& a) {
    const Profile& p = a.profile();
    // Column sums over the even rows, restricted to odd columns.
    std::vector<long> top;
    for (int j = p.m + 1; j <= p.size(); ++j) {
        long s = 0;
        for (int i = 1; i <= p.m; ++i) s += a(i, j);
        top.push_back(s);
    }
    long total = 0;
    long prefix = 0;
    for (long t : top) {
        total += prefix * t;
        prefix += t;
    }
    return total;
}

long s_sign(int h, int i, const SuperMatrix& a) {
    const Profile& p = a.profile();
    check_root_index(h, p, "s_sign");
    check_index(i, p, "s_sign");
    if (h != p.m) return 0;
    long s = 0;
    const int tmax = std::min(i - 1, p.m);
    for (int r = p.m + 1; r <= p.size(); ++r)
        for (int t = 1; t <= tmax; ++t) s += a(r, t);
    if (i > p.m) {
        for (int r = 1; r <= p.m; ++r)
            for (int t = i + 1; t <= p.size(); ++t) s += a(r, t);
    }
    return s;
}

long upper_L(const SuperMatrix& a, int s, int t) {
    check_index(s, a.profile(), "upper_L");
    check_index(t, a.profile(), "upper_L");
    if (s >= t) throw std::invalid_argument("upper_L requires s < t");
    long sum = 0;
    for (int i = 1; i <= s; ++i)
        for (int j = t; j <= a.size(); ++j) sum += a(i, j);
    return sum;
}

long lower_neg(const SuperMatrix& a, int s, int t) {
    check_index(s, a.profile(), "lower_neg");
    check_index(t, a.profile(), "lower_neg");
    if (s <= t) throw std::invalid_argument("lower_neg requires s > t");
    long sum = 0;
    for (int i = s; i <= a.size(); ++i)
        for (int j = 1; j <= t; ++j) sum += a(i, j);
    return sum;
}

bool preceq(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.profile() != b.profile()) throw std::invalid_argument("preceq: profile mismatch");
    const int n = a.size();
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (upper_L(a, s, t) > upper_L(b, s, t)) return false;
        }
        for (int t = 1; t < s; ++t) {
            if (lower_neg(a, s, t) > lower_neg(b, s, t)) return false;
        }
    }
    return true;
}

bool precedes(const SuperMatrix& a, const SuperMatrix& b) { return a != b && preceq(a, b); }

std::vector<SuperMatrix> downset(const SuperMatrix& a) {
    if (!a.is_off_diagonal()) throw std::invalid_argument("downset: matrix has a nonzero diagonal");
    const Profile p = a.profile();
    const int n = p.size();
    struct Slot {
        int i;
        int j;
        int bound;
    };
    std::vector<Slot> slots;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            long bound = i < j ? upper_L(a, i, j) : lower_neg(a, i, j);
            if (a.is_odd_slot(i, j)) bound = std::min(bound, 1L);
            slots.push_back({i, j, static_cast<int>(bound)});
        }
    }
    std::vector<SuperMatrix> out;
    std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == slots.size()) {
            SuperMatrix b(p, entries);
            if (preceq(b, a)) out.push_back(std::move(b));
            return;
        }
        const Slot& s = slots[k];
        const auto idx = static_cast<std::size_t>((s.i - 1) * n + (s.j - 1));
        for (int x = 0; x <= s.bound; ++x) {
            entries[idx] = x;
            self(self, k + 1);
        }
        entries[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

void for_each_matrix(Profile p, int bound, bool off_diagonal_only,
                     const std::function<void(const SuperMatrix&)>& visit) {
    validate_profile(p);
    const int n = p.size();
    SuperMatrix cur(p);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n * n) {
            visit(cur);
            return;
        }
        const int i = k / n + 1;
        const int j = k % n + 1;
        int hi = bound;
        if (i == j && off_diagonal_only) hi = 0;
        if (cur.is_odd_slot(i, j)) hi = std::min(hi, 1);
        for (int x = 0; x <= hi; ++x) {
            cur.set_unchecked(i, j, x);
            self(self, k + 1);
        }
        cur.set_unchecked(i, j, 0);
    };
    rec(rec, 0);
}

std::vector<SuperMatrix> enumerate_matrices(Profile p, int bound, bool off_diagonal_only) {
    std::vector<SuperMatrix> out;
    for_each_matrix(p, bound, off_diagonal_only, [&](const SuperMatrix& a) { out.push_back(a); });
    return out;
}

std::vector<IntVector> enumerate_vectors(Profile p, int lo, int hi) {
    validate_profile(p);
    std::vector<IntVector> out;
    IntVector cur(static_cast<std::size_t>(p.size()), lo);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int x = lo; x <= hi; ++x) {
            cur[k] = x;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace uglmn
