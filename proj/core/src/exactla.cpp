#include "semihom/exactla.hpp"

#include <algorithm>
#include <cassert>

namespace semihom {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    check(is_prime_u32(p), Errc::not_prime, "field modulus " + std::to_string(p) + " is not prime");
    check(p < (1u << 20), Errc::config, "prime modulus too large for the dense kernels");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.size() > 2 && (s[0] == 'f' || s[0] == 'F') && s[1] == ':') {
        try {
            unsigned long p = std::stoul(s.substr(2));
            return prime(static_cast<std::uint32_t>(p));
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw Error(Errc::config, "bad field spec: " + s);
        }
    }
    throw Error(Errc::config, "bad field spec: " + s + " (expected q or f:p)");
}

std::string FieldSpec::name() const {
    return is_rationals() ? "q" : "f:" + std::to_string(p_);
}

namespace {

std::int64_t mod_reduce(long v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t acc = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    check(a % p != 0, Errc::singular, "division by zero in F_p");
    return mod_pow(a, p - 2, p);
}

} // namespace

ExactMatrix::ExactMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    check(rows >= 0 && cols >= 0, Errc::shape_mismatch, "negative matrix dimensions");
    std::size_t n = static_cast<std::size_t>(rows) * cols;
    if (field_.is_rationals())
        q_.assign(n, mpq_class(0));
    else
        m_.assign(n, 0);
}

ExactMatrix ExactMatrix::identity(FieldSpec field, int n) {
    ExactMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        check(static_cast<int>(rows[i].size()) == c, Errc::shape_mismatch, "ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void ExactMatrix::set(int i, int j, long v) {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals())
        q_[k] = mpq_class(v);
    else
        m_[k] = mod_reduce(v, field_.characteristic());
}

void ExactMatrix::set(int i, int j, const mpq_class& v) {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals()) {
        q_[k] = v;
        q_[k].canonicalize();
    } else {
        std::int64_t p = field_.characteristic();
        mpz_class num = v.get_num() % p;
        mpz_class den = v.get_den() % p;
        std::int64_t n = mod_reduce(num.get_si(), p);
        std::int64_t d = mod_reduce(den.get_si(), p);
        m_[k] = n * mod_inv(d, p) % p;
    }
}

void ExactMatrix::add_to(int i, int j, long v) {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals()) {
        q_[k] += v;
    } else {
        std::int64_t p = field_.characteristic();
        m_[k] = mod_reduce(m_[k] + mod_reduce(v, p), p);
    }
}

mpq_class ExactMatrix::get(int i, int j) const {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals()) return q_[k];
    return mpq_class(static_cast<long>(m_[k]));
}

bool ExactMatrix::entry_is_zero(int i, int j) const {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    return field_.is_rationals() ? q_[k] == 0 : m_[k] == 0;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& other) const {
    check(field_ == other.field_, Errc::shape_mismatch, "field mismatch in multiply");
    check(cols_ == other.rows_, Errc::shape_mismatch, "shape mismatch in multiply");
    ExactMatrix out(field_, rows_, other.cols_);
    if (field_.is_rationals()) {
        mpq_class acc, tmp;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < other.cols_; ++j) {
                acc = 0;
                for (int k = 0; k < cols_; ++k) {
                    const mpq_class& a = q_[static_cast<std::size_t>(i) * cols_ + k];
                    if (a == 0) continue;
                    tmp = a * other.q_[static_cast<std::size_t>(k) * other.cols_ + j];
                    acc += tmp;
                }
                out.q_[static_cast<std::size_t>(i) * other.cols_ + j] = acc;
            }
    } else {
        std::int64_t p = field_.characteristic();
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < other.cols_; ++j) {
                unsigned __int128 acc = 0;
                for (int k = 0; k < cols_; ++k)
                    acc += static_cast<unsigned __int128>(m_[static_cast<std::size_t>(i) * cols_ + k]) *
                           other.m_[static_cast<std::size_t>(k) * other.cols_ + j];
                out.m_[static_cast<std::size_t>(i) * other.cols_ + j] =
                    static_cast<std::int64_t>(acc % static_cast<unsigned __int128>(p));
            }
    }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (field_.is_rationals())
                out.q_[static_cast<std::size_t>(j) * rows_ + i] = q_[static_cast<std::size_t>(i) * cols_ + j];
            else
                out.m_[static_cast<std::size_t>(j) * rows_ + i] = m_[static_cast<std::size_t>(i) * cols_ + j];
        }
    return out;
}

ExactMatrix ExactMatrix::col(int j) const {
    ExactMatrix out(field_, rows_, 1);
    for (int i = 0; i < rows_; ++i) {
        if (field_.is_rationals())
            out.q_[i] = q_[static_cast<std::size_t>(i) * cols_ + j];
        else
            out.m_[i] = m_[static_cast<std::size_t>(i) * cols_ + j];
    }
    return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& other) const {
    check(field_ == other.field_ && rows_ == other.rows_, Errc::shape_mismatch, "hstack mismatch");
    ExactMatrix out(field_, rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (field_.is_rationals())
                out.q_[static_cast<std::size_t>(i) * out.cols_ + j] = q_[static_cast<std::size_t>(i) * cols_ + j];
            else
                out.m_[static_cast<std::size_t>(i) * out.cols_ + j] = m_[static_cast<std::size_t>(i) * cols_ + j];
        }
        for (int j = 0; j < other.cols_; ++j) {
            if (field_.is_rationals())
                out.q_[static_cast<std::size_t>(i) * out.cols_ + cols_ + j] =
                    other.q_[static_cast<std::size_t>(i) * other.cols_ + j];
            else
                out.m_[static_cast<std::size_t>(i) * out.cols_ + cols_ + j] =
                    other.m_[static_cast<std::size_t>(i) * other.cols_ + j];
        }
    }
    return out;
}

bool ExactMatrix::is_zero() const {
    if (field_.is_rationals()) {
        for (const auto& v : q_)
            if (v != 0) return false;
    } else {
        for (auto v : m_)
            if (v != 0) return false;
    }
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
    return field_.is_rationals() ? q_ == other.q_ : m_ == other.m_;
}

ExactMatrix ExactMatrix::reduced_mod(std::uint32_t p) const {
    check(field_.is_rationals(), Errc::config, "reduced_mod expects a rational matrix");
    ExactMatrix out(FieldSpec::prime(p), rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, q_[static_cast<std::size_t>(i) * cols_ + j]);
    return out;
}

// ---------------------------------------------------------------------------
// elimination kernels
// ---------------------------------------------------------------------------

namespace {

// Row-reduce (full RREF) over Q. Pivot columns restricted to [0, pivot_cols).
// Returns the list of pivot columns, one per pivot row.
std::vector<int> rref_q(std::vector<mpq_class>& a, int rows, int cols, int pivot_cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < pivot_cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * cols + j], a[static_cast<std::size_t>(r) * cols + j]);
        mpq_class inv = 1 / a[static_cast<std::size_t>(r) * cols + c];
        for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(r) * cols + j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            mpq_class f = a[static_cast<std::size_t>(i) * cols + c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i) * cols + j] -= f * a[static_cast<std::size_t>(r) * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<int> rref_p(std::vector<std::int64_t>& a, int rows, int cols, int pivot_cols, std::int64_t p) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < pivot_cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * cols + j], a[static_cast<std::size_t>(r) * cols + j]);
        std::int64_t inv = mod_inv(a[static_cast<std::size_t>(r) * cols + c], p);
        for (int j = c; j < cols; ++j)
            a[static_cast<std::size_t>(r) * cols + j] = a[static_cast<std::size_t>(r) * cols + j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = a[static_cast<std::size_t>(i) * cols + c];
            if (f == 0) continue;
            std::int64_t nf = p - f;
            for (int j = c; j < cols; ++j) {
                a[static_cast<std::size_t>(i) * cols + j] =
                    (a[static_cast<std::size_t>(i) * cols + j] +
                     nf * a[static_cast<std::size_t>(r) * cols + j]) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Bit-packed rows over F_2; one row is `stride` 64-bit words.
struct PackedF2 {
    int rows = 0, cols = 0, stride = 0;
    std::vector<std::uint64_t> w;

    PackedF2(int r, int c) : rows(r), cols(c), stride((c + 63) / 64), w(static_cast<std::size_t>(r) * stride, 0) {}

    bool get(int i, int j) const { return (w[static_cast<std::size_t>(i) * stride + j / 64] >> (j % 64)) & 1; }
    void flip(int i, int j) { w[static_cast<std::size_t>(i) * stride + j / 64] ^= 1ull << (j % 64); }

    static PackedF2 pack(const std::vector<std::int64_t>& a, int rows, int cols) {
        PackedF2 m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (a[static_cast<std::size_t>(i) * cols + j]) m.flip(i, j);
        return m;
    }
};

std::vector<int> rref_f2(PackedF2& m, int pivot_cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < pivot_cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int k = 0; k < m.stride; ++k)
                std::swap(m.w[static_cast<std::size_t>(pr) * m.stride + k],
                          m.w[static_cast<std::size_t>(r) * m.stride + k]);
        for (int i = 0; i < m.rows; ++i) {
            if (i != r && m.get(i, c)) {
                std::uint64_t* dst = &m.w[static_cast<std::size_t>(i) * m.stride];
                const std::uint64_t* src = &m.w[static_cast<std::size_t>(r) * m.stride];
                for (int k = c / 64; k < m.stride; ++k) dst[k] ^= src[k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

struct Reduced {
    std::vector<int> pivots;
    // exactly one of these is populated, matching the matrix field
    std::vector<mpq_class> q;
    std::vector<std::int64_t> m;
    PackedF2 b{0, 0};
    bool packed = false;
};

Reduced reduce_matrix(const ExactMatrix& mat, int pivot_cols) {
    Reduced out;
    if (mat.field().is_rationals()) {
        out.q = mat.qdata();
        out.pivots = rref_q(out.q, mat.rows(), mat.cols(), pivot_cols);
    } else if (mat.field().characteristic() == 2) {
        out.b = PackedF2::pack(mat.pdata(), mat.rows(), mat.cols());
        out.pivots = rref_f2(out.b, pivot_cols);
        out.packed = true;
    } else {
        out.m = mat.pdata();
        out.pivots = rref_p(out.m, mat.rows(), mat.cols(), pivot_cols, mat.field().characteristic());
    }
    return out;
}

mpq_class reduced_entry(const Reduced& r, const ExactMatrix& mat, int i, int j) {
    if (mat.field().is_rationals()) return r.q[static_cast<std::size_t>(i) * mat.cols() + j];
    if (r.packed) return mpq_class(r.b.get(i, j) ? 1 : 0);
    return mpq_class(static_cast<long>(r.m[static_cast<std::size_t>(i) * mat.cols() + j]));
}

} // namespace

int rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(reduce_matrix(m, m.cols()).pivots.size());
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    int n = m.cols();
    if (n == 0) return ExactMatrix(m.field(), 0, 0);
    Reduced red = reduce_matrix(m, n);
    std::vector<bool> is_pivot(n, false);
    for (int c : red.pivots) is_pivot[c] = true;
    int nullity = n - static_cast<int>(red.pivots.size());
    ExactMatrix basis(m.field(), n, nullity);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, out, 1);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
            mpq_class v = reduced_entry(red, m, static_cast<int>(r), f);
            if (v != 0) basis.set(red.pivots[r], out, mpq_class(-v));
        }
        ++out;
    }
    return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    check(a.rows() == b.rows() && a.field() == b.field(), Errc::shape_mismatch, "solve shape mismatch");
    ExactMatrix aug = a.hstack(b);
    Reduced red = reduce_matrix(aug, a.cols());
    // rows past the last pivot must have zero right-hand side
    for (int i = static_cast<int>(red.pivots.size()); i < aug.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (reduced_entry(red, aug, i, a.cols() + j) != 0) return std::nullopt;
    ExactMatrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) {
            mpq_class v = reduced_entry(red, aug, static_cast<int>(r), a.cols() + j);
            if (v != 0) x.set(red.pivots[r], j, v);
        }
    return x;
}

// ---------------------------------------------------------------------------
// SpanBuilder
// ---------------------------------------------------------------------------

SpanBuilder::SpanBuilder(FieldSpec field, int dim) : field_(field), dim_(dim) {}

bool SpanBuilder::reduce(std::vector<mpq_class>& v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const mpq_class& lead = v[pivots_[r]];
        if (lead == 0) continue;
        mpq_class f = lead;
        const auto& row = qrows_[r];
        for (int j = pivots_[r]; j < dim_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) return false;
    return true;
}

bool SpanBuilder::reduce_p(std::vector<std::int64_t>& v) const {
    std::int64_t p = field_.characteristic();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        std::int64_t lead = v[pivots_[r]];
        if (lead == 0) continue;
        std::int64_t nf = p - lead;
        const auto& row = prows_[r];
        for (int j = pivots_[r]; j < dim_; ++j)
            v[j] = (v[j] + nf * row[j]) % p;
    }
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) return false;
    return true;
}

bool SpanBuilder::reduce_b(std::vector<std::uint64_t>& v, int* lead) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        int c = pivots_[r];
        if ((v[c / 64] >> (c % 64)) & 1) {
            const auto& row = brows_[r];
            for (std::size_t k = c / 64; k < v.size(); ++k) v[k] ^= row[k];
        }
    }
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) {
            if (lead) *lead = static_cast<int>(k * 64 + __builtin_ctzll(v[k]));
            return false;
        }
    return true;
}

bool SpanBuilder::add(const ExactMatrix& column) {
    check(column.rows() == dim_ && column.cols() == 1 && column.field() == field_,
          Errc::shape_mismatch, "SpanBuilder vector mismatch");
    if (field_.is_rationals()) {
        std::vector<mpq_class> v = column.qdata();
        if (reduce(v)) return false;
        int lead = 0;
        while (v[lead] == 0) ++lead;
        mpq_class inv = 1 / v[lead];
        for (int j = lead; j < dim_; ++j) v[j] *= inv;
        auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, lead);
        qrows_.insert(qrows_.begin() + pos, std::move(v));
        return true;
    }
    if (field_.characteristic() == 2) {
        std::vector<std::uint64_t> v((dim_ + 63) / 64, 0);
        for (int i = 0; i < dim_; ++i)
            if (column.pdata()[i]) v[i / 64] ^= 1ull << (i % 64);
        int lead = 0;
        if (reduce_b(v, &lead)) return false;
        auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, lead);
        brows_.insert(brows_.begin() + pos, std::move(v));
        return true;
    }
    std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> v = column.pdata();
    if (reduce_p(v)) return false;
    int lead = 0;
    while (v[lead] == 0) ++lead;
    std::int64_t inv = mod_inv(v[lead], p);
    for (int j = lead; j < dim_; ++j) v[j] = v[j] * inv % p;
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    prows_.insert(prows_.begin() + pos, std::move(v));
    return true;
}

bool SpanBuilder::contains(const ExactMatrix& column) const {
    check(column.rows() == dim_ && column.cols() == 1 && column.field() == field_,
          Errc::shape_mismatch, "SpanBuilder vector mismatch");
    if (field_.is_rationals()) {
        std::vector<mpq_class> v = column.qdata();
        return reduce(v);
    }
    if (field_.characteristic() == 2) {
        std::vector<std::uint64_t> v((dim_ + 63) / 64, 0);
        for (int i = 0; i < dim_; ++i)
            if (column.pdata()[i]) v[i / 64] ^= 1ull << (i % 64);
        return reduce_b(v, nullptr);
    }
    std::vector<std::int64_t> v = column.pdata();
    return reduce_p(v);
}

// ---------------------------------------------------------------------------
// ChainComplex
// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(FieldSpec field_in, std::vector<int> dims_in,
                           std::vector<ExactMatrix> differentials_in)
    : field(field_in), dims(std::move(dims_in)), differentials(std::move(differentials_in)) {
    check(!dims.empty(), Errc::shape_mismatch, "empty chain complex");
    check(differentials.size() + 1 == dims.size(), Errc::shape_mismatch,
          "chain complex needs one differential per positive degree");
    for (std::size_t n = 0; n < differentials.size(); ++n) {
        const ExactMatrix& d = differentials[n];
        check(d.field() == field, Errc::shape_mismatch, "differential field mismatch");
        check(d.rows() == dims[n] && d.cols() == dims[n + 1], Errc::shape_mismatch,
              "differential shape mismatch at degree " + std::to_string(n + 1));
    }
    for (std::size_t n = 0; n + 1 < differentials.size(); ++n) {
        if (!differentials[n].multiply(differentials[n + 1]).is_zero())
            throw Error(Errc::differential_square_nonzero,
                        "d_" + std::to_string(n + 1) + " ∘ d_" + std::to_string(n + 2) + " != 0");
    }
}

std::vector<int> homology_dims(const ChainComplex& c) {
    std::size_t top = c.dims.size();
    std::vector<int> ranks(top + 1, 0); // ranks[n] = rank d_n, d_0 and d_{top} are zero maps
    for (std::size_t n = 0; n < c.differentials.size(); ++n) ranks[n + 1] = rank(c.differentials[n]);
    std::vector<int> h(top);
    for (std::size_t n = 0; n < top; ++n) h[n] = c.dims[n] - ranks[n] - ranks[n + 1];
    return h;
}

} // namespace semihom
