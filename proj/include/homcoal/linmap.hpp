#ifndef HOMCOAL_LINMAP_HPP
#define HOMCOAL_LINMAP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <homcoal/errors.hpp>
#include <homcoal/rational.hpp>

namespace homcoal {

/**
 * An ordered tensor product of finite-dimensional spaces, identified by the
 * list of factor dimensions. A pure tensor power of the base space is the
 * common case; mixed products (e.g. L tensor M for a comodule coaction) carry
 * factors of different dimensions.
 *
 * The basis of a k-factor space is ordered lexicographically by index tuples
 * (i_0, ..., i_{k-1}), flattened row-major: the last factor varies fastest.
 * Every operator in the library uses this one flattening.
 */
class TensorSpace {
public:
    TensorSpace() = default; // empty product: the scalar line, dim 1, arity 0

    explicit TensorSpace(std::vector<int> factors) : factors_(std::move(factors)) {
        for (int f : factors_)
            if (f <= 0) throw argument_error("tensor factor dimension must be positive");
    }

    static TensorSpace line(int dim) { return TensorSpace({dim}); }

    static TensorSpace power(int base_dim, int arity) {
        if (arity < 0) throw argument_error("tensor arity must be non-negative");
        return TensorSpace(std::vector<int>(static_cast<std::size_t>(arity), base_dim));
    }

    int arity() const { return static_cast<int>(factors_.size()); }

    int factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }

    const std::vector<int>& factors() const { return factors_; }

    long long dim() const {
        long long d = 1;
        for (int f : factors_) d *= f;
        return d;
    }

    TensorSpace tensor(const TensorSpace& other) const {
        std::vector<int> fs = factors_;
        fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
        return TensorSpace(std::move(fs));
    }

    // Index tuple of the flat basis index, lex order.
    std::vector<int> unflatten(long long index) const {
        std::vector<int> tup(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            tup[i] = static_cast<int>(index % factors_[i]);
            index /= factors_[i];
        }
        return tup;
    }

    long long flatten(const std::vector<int>& tuple) const {
        long long idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + tuple[i];
        return idx;
    }

    bool operator==(const TensorSpace& other) const { return factors_ == other.factors_; }
    bool operator!=(const TensorSpace& other) const { return !(*this == other); }

    std::string to_string() const {
        if (factors_.empty()) return "k";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(factors_[i]);
        }
        return s;
    }

private:
    std::vector<int> factors_;
};

/**
 * Exact linear map between tensor spaces, stored as sparse columns in the
 * canonical bases: column j holds the image of basis vector j. No zero entry
 * is ever stored, so equality is structural comparison. Values are immutable
 * in spirit: every operation returns a fresh map.
 */
class LinMap {
public:
    using Column = std::map<long long, Rational>;

    LinMap(TensorSpace domain, TensorSpace codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          cols_(static_cast<std::size_t>(domain_.dim())) {}

    static LinMap zero(const TensorSpace& domain, const TensorSpace& codomain) {
        return LinMap(domain, codomain);
    }

    static LinMap identity(const TensorSpace& space) {
        LinMap m(space, space);
        for (long long j = 0; j < space.dim(); ++j) m.cols_[static_cast<std::size_t>(j)][j] = 1;
        return m;
    }

    // Columns given densely, image-major: columns[j] is the image of basis j.
    static LinMap from_columns(const TensorSpace& domain, const TensorSpace& codomain,
                               const std::vector<std::vector<Rational>>& columns) {
        if (static_cast<long long>(columns.size()) != domain.dim())
            throw dimension_error("column count " + std::to_string(columns.size()) +
                                  " does not match domain " + domain.to_string());
        LinMap m(domain, codomain);
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (static_cast<long long>(columns[j].size()) != codomain.dim())
                throw dimension_error("column height does not match codomain " +
                                      codomain.to_string());
            for (std::size_t r = 0; r < columns[j].size(); ++r)
                if (columns[j][r] != 0) m.cols_[j][static_cast<long long>(r)] = columns[j][r];
        }
        return m;
    }

    const TensorSpace& domain() const { return domain_; }
    const TensorSpace& codomain() const { return codomain_; }

    Rational entry(long long row, long long col) const {
        const auto& c = cols_.at(static_cast<std::size_t>(col));
        const auto it = c.find(row);
        return it == c.end() ? Rational(0) : it->second;
    }

    void set_entry(long long row, long long col, const Rational& value) {
        auto& c = cols_.at(static_cast<std::size_t>(col));
        if (value == 0)
            c.erase(row);
        else
            c[row] = value;
    }

    const Column& column(long long j) const { return cols_.at(static_cast<std::size_t>(j)); }

    std::vector<Rational> column_dense(long long j) const {
        std::vector<Rational> v(static_cast<std::size_t>(codomain_.dim()), Rational(0));
        for (const auto& [r, x] : column(j)) v[static_cast<std::size_t>(r)] = x;
        return v;
    }

    bool is_zero() const {
        return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
    }

    long long nonzero_count() const {
        long long n = 0;
        for (const auto& c : cols_) n += static_cast<long long>(c.size());
        return n;
    }

    bool operator==(const LinMap& other) const {
        return domain_ == other.domain_ && codomain_ == other.codomain_ && cols_ == other.cols_;
    }
    bool operator!=(const LinMap& other) const { return !(*this == other); }

    friend LinMap compose(const LinMap& g, const LinMap& f);
    friend LinMap tensor(const LinMap& f, const LinMap& g);
    friend LinMap add(const LinMap& f, const LinMap& g);
    friend LinMap scale(const Rational& c, const LinMap& f);
    friend LinMap transpose(const LinMap& f);

private:
    TensorSpace domain_;
    TensorSpace codomain_;
    std::vector<Column> cols_;
};

// g after f; requires domain(g) = codomain(f). Sparse product: only nonzero
// entries of f and the touched columns of g are visited.
inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (g.domain() != f.codomain())
        throw dimension_error("compose mismatch: inner spaces " + g.domain().to_string() +
                              " vs " + f.codomain().to_string());
    LinMap out(f.domain(), g.codomain());
    for (std::size_t j = 0; j < out.cols_.size(); ++j) {
        auto& col = out.cols_[j];
        for (const auto& [k, a] : f.cols_[j])
            for (const auto& [i, b] : g.cols_[static_cast<std::size_t>(k)]) {
                auto it = col.try_emplace(i, 0).first;
                it->second += a * b;
                if (it->second == 0) col.erase(it);
            }
    }
    return out;
}

// Kronecker product: (f tensor g)(x tensor y) = f(x) tensor g(y); domain and
// codomain factor lists concatenate, consistent with the lex flattening.
inline LinMap tensor(const LinMap& f, const LinMap& g) {
    LinMap out(f.domain().tensor(g.domain()), f.codomain().tensor(g.codomain()));
    const long long gdom = g.domain().dim(), gcod = g.codomain().dim();
    for (std::size_t jf = 0; jf < f.cols_.size(); ++jf)
        for (long long jg = 0; jg < gdom; ++jg) {
            auto& col = out.cols_[jf * static_cast<std::size_t>(gdom) +
                                  static_cast<std::size_t>(jg)];
            for (const auto& [rf, a] : f.cols_[jf])
                for (const auto& [rg, b] : g.cols_[static_cast<std::size_t>(jg)])
                    col[rf * gcod + rg] = a * b;
        }
    return out;
}

inline LinMap add(const LinMap& f, const LinMap& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        throw dimension_error("add mismatch: " + f.domain().to_string() + "->" +
                              f.codomain().to_string() + " vs " + g.domain().to_string() +
                              "->" + g.codomain().to_string());
    LinMap out = f;
    for (std::size_t j = 0; j < out.cols_.size(); ++j)
        for (const auto& [r, x] : g.cols_[j]) {
            auto it = out.cols_[j].try_emplace(r, 0).first;
            it->second += x;
            if (it->second == 0) out.cols_[j].erase(it);
        }
    return out;
}

inline LinMap scale(const Rational& c, const LinMap& f) {
    LinMap out(f.domain(), f.codomain());
    if (c == 0) return out;
    out = f;
    for (auto& col : out.cols_)
        for (auto& [r, x] : col) x *= c;
    return out;
}

inline bool equal(const LinMap& f, const LinMap& g) { return f == g; }

inline LinMap operator*(const LinMap& g, const LinMap& f) { return compose(g, f); }
inline LinMap operator+(const LinMap& f, const LinMap& g) { return add(f, g); }
inline LinMap operator-(const LinMap& f, const LinMap& g) {
    return add(f, scale(Rational(-1), g));
}
inline LinMap operator*(const Rational& c, const LinMap& f) { return scale(c, f); }

// Matrix transpose; domain and codomain swap. Used by the duality module,
// where dual bases are identified with the original ones.
inline LinMap transpose(const LinMap& f) {
    LinMap out(f.codomain(), f.domain());
    for (std::size_t j = 0; j < f.cols_.size(); ++j)
        for (const auto& [r, x] : f.cols_[j])
            out.cols_[static_cast<std::size_t>(r)][static_cast<long long>(j)] = x;
    return out;
}

/**
 * Permutation operator on a tensor space. image_positions[p] is the output
 * slot that input factor p moves to, so
 *   perm(sigma) . perm(rho) = perm(sigma o rho),
 * and factor dimensions travel with their factors (mixed products permute
 * correctly). Content view for the common builders on x0 (x) x1 (x) x2:
 *   flip        x (x) y        -> y (x) x
 *   cycle_left  x (x) y (x) z  -> y (x) z (x) x
 *   cycle_right x (x) y (x) z  -> z (x) x (x) y
 *   swap_first_two keeps trailing factors fixed.
 */
inline LinMap perm_operator(const TensorSpace& domain, const std::vector<int>& image_positions) {
    const int k = domain.arity();
    if (static_cast<int>(image_positions.size()) != k)
        throw argument_error("permutation length " + std::to_string(image_positions.size()) +
                             " does not match arity " + std::to_string(k));
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int p : image_positions) {
        if (p < 0 || p >= k || seen[static_cast<std::size_t>(p)])
            throw argument_error("image_positions is not a permutation of 0.." +
                                 std::to_string(k - 1));
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<int> out_factors(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p)
        out_factors[static_cast<std::size_t>(image_positions[static_cast<std::size_t>(p)])] =
            domain.factor(p);
    const TensorSpace codomain = k == 0 ? TensorSpace() : TensorSpace(out_factors);
    LinMap m(domain, codomain);
    std::vector<int> tup(static_cast<std::size_t>(k), 0), out_tup(static_cast<std::size_t>(k), 0);
    for (long long j = 0; j < domain.dim(); ++j) {
        for (int p = 0; p < k; ++p)
            out_tup[static_cast<std::size_t>(image_positions[static_cast<std::size_t>(p)])] =
                tup[static_cast<std::size_t>(p)];
        m.set_entry(codomain.flatten(out_tup), j, Rational(1));
        for (int p = k - 1; p >= 0; --p) { // odometer over the domain tuple
            if (++tup[static_cast<std::size_t>(p)] < domain.factor(p)) break;
            tup[static_cast<std::size_t>(p)] = 0;
        }
    }
    return m;
}

inline LinMap swap_first_two(const TensorSpace& space) {
    if (space.arity() < 2) throw argument_error("swap_first_two needs arity >= 2");
    std::vector<int> img(static_cast<std::size_t>(space.arity()));
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[0], img[1]);
    return perm_operator(space, img);
}

inline LinMap flip(const TensorSpace& space) {
    if (space.arity() != 2) throw argument_error("flip needs arity 2");
    return swap_first_two(space);
}

inline LinMap cycle_left(const TensorSpace& space) {
    const int k = space.arity();
    if (k < 1) throw argument_error("cycle_left needs arity >= 1");
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) img[static_cast<std::size_t>(p)] = (p + k - 1) % k;
    return perm_operator(space, img);
}

inline LinMap cycle_right(const TensorSpace& space) {
    const int k = space.arity();
    if (k < 1) throw argument_error("cycle_right needs arity >= 1");
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) img[static_cast<std::size_t>(p)] = (p + 1) % k;
    return perm_operator(space, img);
}

/**
 * Exact basis of the kernel of f, parameterized over the pivot-free columns
 * of the reduced row echelon form: basis vector for free column c has a 1 at
 * c, the negated RREF coefficients at the pivot positions, and 0 at the other
 * free columns. Forward elimination is fraction-free (Bareiss) over integer
 * rows after clearing denominators; back substitution is rational and exact.
 * Empty result iff f is injective.
 */
inline std::vector<std::vector<Rational>> kernel_basis(const LinMap& f) {
    const long long m = f.codomain().dim(), n = f.domain().dim();
    // Dense integer rows, denominators cleared row by row.
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m),
                                       std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    {
        std::vector<Rational> row(static_cast<std::size_t>(n));
        for (long long i = 0; i < m; ++i) {
            std::fill(row.begin(), row.end(), Rational(0));
            bool any = false;
            for (long long j = 0; j < n; ++j) {
                const Rational x = f.entry(i, j);
                if (x != 0) { row[static_cast<std::size_t>(j)] = x; any = true; }
            }
            if (!any) continue;
            Int lcm_den(1);
            for (const auto& x : row)
                if (x != 0) lcm_den = boost::multiprecision::lcm(lcm_den,
                    boost::multiprecision::denominator(x));
            for (long long j = 0; j < n; ++j) {
                const Rational scaled = row[static_cast<std::size_t>(j)] * lcm_den;
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    boost::multiprecision::numerator(scaled);
            }
        }
    }
    // Bareiss forward elimination with pivot-column tracking.
    std::vector<long long> pivot_col;
    Int prev_pivot(1);
    long long rank = 0;
    for (long long c = 0; c < n && rank < m; ++c) {
        long long pr = -1;
        for (long long r = rank; r < m; ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pr)]);
        const Int pivot = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        for (long long r = rank + 1; r < m; ++r) {
            auto& R = rows[static_cast<std::size_t>(r)];
            const auto& P = rows[static_cast<std::size_t>(rank)];
            const Int head = R[static_cast<std::size_t>(c)];
            // Bareiss update must hit every row below, zero head included,
            // or later exact divisions by prev_pivot stop being exact.
            for (long long j = c; j < n; ++j) {
                Int v = pivot * R[static_cast<std::size_t>(j)] -
                        head * P[static_cast<std::size_t>(j)];
                R[static_cast<std::size_t>(j)] = v / prev_pivot; // exact by Bareiss
            }
        }
        prev_pivot = pivot;
        pivot_col.push_back(c);
        ++rank;
    }
    // Rational back substitution straight into the kernel vectors.
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (long long fc = 0; fc < n; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(fc)] = 1;
        for (long long t = rank - 1; t >= 0; --t) {
            const auto& R = rows[static_cast<std::size_t>(t)];
            const long long pc = pivot_col[static_cast<std::size_t>(t)];
            Rational acc(0);
            for (long long j = pc + 1; j < n; ++j)
                if (R[static_cast<std::size_t>(j)] != 0 && v[static_cast<std::size_t>(j)] != 0)
                    acc += Rational(R[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(pc)] = -acc / Rational(R[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace homcoal

#endif // HOMCOAL_LINMAP_HPP
