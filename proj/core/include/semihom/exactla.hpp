#ifndef SEMIHOM_EXACTLA_HPP
#define SEMIHOM_EXACTLA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "semihom/errors.hpp"

namespace semihom {

bool is_prime_u32(std::uint32_t n);

// Coefficient field: the rationals or a prime field F_p. All arithmetic in
// the library is exact; there is no floating point anywhere.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(std::uint32_t p);
    // "q" for the rationals, "f:p" for F_p.
    static FieldSpec parse(const std::string& s);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;
    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_; // 0 means rationals
};

// Dense matrix over a FieldSpec. Entries are kept canonical: rationals in
// lowest terms, prime-field values in [0,p). Rationals use GMP.
class ExactMatrix {
public:
    ExactMatrix() : ExactMatrix(FieldSpec::rationals(), 0, 0) {}
    ExactMatrix(FieldSpec field, int rows, int cols); // zero matrix
    static ExactMatrix identity(FieldSpec field, int n);
    static ExactMatrix from_rows(FieldSpec field,
                                 const std::vector<std::vector<long>>& rows);

    FieldSpec field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, long v);
    void set(int i, int j, const mpq_class& v);
    void add_to(int i, int j, long v);
    mpq_class get(int i, int j) const;
    bool entry_is_zero(int i, int j) const;

    ExactMatrix multiply(const ExactMatrix& other) const;
    ExactMatrix transpose() const;
    ExactMatrix col(int j) const;
    ExactMatrix hstack(const ExactMatrix& other) const;
    bool is_zero() const;
    bool operator==(const ExactMatrix& other) const;

    // Reduce an integer matrix over Q to F_p entrywise.
    ExactMatrix reduced_mod(std::uint32_t p) const;

    // internal canonical storage, exposed for the elimination kernels
    const std::vector<mpq_class>& qdata() const { return q_; }
    const std::vector<std::int64_t>& pdata() const { return m_; }
    std::vector<mpq_class>& qdata() { return q_; }
    std::vector<std::int64_t>& pdata() { return m_; }

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<mpq_class> q_;     // used when field is Q
    std::vector<std::int64_t> m_;  // used when field is F_p
};

int rank(const ExactMatrix& m);

// Columns form a basis of { v : m v = 0 }; exactly cols(m) - rank(m) of them.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Solve a X = b columnwise; nullopt if any column is inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// Incremental row-space accumulator: feed vectors, query membership and rank.
// Used for image spans, greedy covers and natural-transformation systems.
class SpanBuilder {
public:
    SpanBuilder(FieldSpec field, int dim);

    // Returns true when the vector enlarged the span.
    bool add(const ExactMatrix& column);
    bool contains(const ExactMatrix& column) const;
    int rank() const { return static_cast<int>(pivots_.size()); }
    int dim() const { return dim_; }

private:
    FieldSpec field_;
    int dim_;
    std::vector<int> pivots_;
    std::vector<std::vector<mpq_class>> qrows_;
    std::vector<std::vector<std::int64_t>> prows_;
    std::vector<std::vector<std::uint64_t>> brows_; // packed, F_2 only

    bool reduce(std::vector<mpq_class>& v) const;
    bool reduce_p(std::vector<std::int64_t>& v) const;
    bool reduce_b(std::vector<std::uint64_t>& v, int* lead) const;
};

// Chain complex ... -> C_n -> C_{n-1} -> ... -> C_0 with exact differentials;
// d[n] has shape dims[n-1] x dims[n]. d∘d = 0 is checked at construction.
struct ChainComplex {
    ChainComplex(FieldSpec field_, std::vector<int> dims_,
                 std::vector<ExactMatrix> differentials_);

    FieldSpec field;
    std::vector<int> dims;                // degree 0..N
    std::vector<ExactMatrix> differentials; // differentials[n-1] = d_n, n = 1..N
};

// dim H_n = dims[n] - rank d_n - rank d_{n+1}, out-of-range d treated as 0.
std::vector<int> homology_dims(const ChainComplex& c);

} // namespace semihom

#endif
