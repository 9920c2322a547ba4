#include "seifert/lattice.hpp"

#include <algorithm>

#include "seifert/error.hpp"
#include "seifert/seifert_data.hpp"
#include "seifert/smith_normal_form.hpp"

namespace seifert {

Lattice lambda_q(long q) {
    if (q <= 1) throw Error(ErrorKind::DegenerateLattice, "Lambda_q needs q >= 2, got " + std::to_string(q));
    // Ambient coordinates (h, e1, ..., e_{2q}) with form diag(1, -1, ..., -1).
    const auto dim = static_cast<std::size_t>(2 * q + 1);
    std::vector<std::vector<std::int64_t>> basis;
    for (long i = 1; i < 2 * q; ++i) {
        std::vector<std::int64_t> v(dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        basis.push_back(std::move(v));
    }
    std::vector<std::int64_t> w(dim, 0);
    w[0] = 1;
    for (long i = 1; i <= q; ++i) w[i] = -1;
    basis.push_back(std::move(w));

    Lattice l;
    l.gram.assign(basis.size(), std::vector<std::int64_t>(basis.size(), 0));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::int64_t s = basis[a][0] * basis[b][0];
            for (std::size_t c = 1; c < dim; ++c) s -= basis[a][c] * basis[b][c];
            l.gram[a][b] = s;
        }
    }
    return l;
}

bool is_negative_definite(const GramMatrix& gram) {
    const std::size_t n = gram.size();
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            if (gram[i].size() != n) return false;
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = static_cast<long>(gram[i][j]);
        }
        const int s = sgn(determinant(minor));
        if (s != (k % 2 == 0 ? 1 : -1)) return false;
    }
    return true;
}

std::int64_t diagonal_pairing(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) s -= x[i] * y[i];
    return s;
}

bool verify_embedding(const GramMatrix& gram, const DiagonalEmbedding& e) {
    if (e.vectors.size() != gram.size()) return false;
    for (const auto& v : e.vectors) {
        if (v.size() != e.dimension) return false;
    }
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            if (diagonal_pairing(e.vectors[i], e.vectors[j]) != gram[i][j]) return false;
        }
    }
    return true;
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t isqrt(std::int64_t v) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Ways to write `rest` as a nonincreasing sum of positive squares, parts
// bounded by `cap`, in lexicographically increasing order.
void square_partitions(std::int64_t rest, std::int64_t cap, Row& prefix, std::vector<Row>& out) {
    if (rest == 0) {
        out.push_back(prefix);
        return;
    }
    const std::int64_t top = std::min(cap, isqrt(rest));
    for (std::int64_t v = 1; v <= top; ++v) {
        prefix.push_back(v);
        square_partitions(rest - v * v, v, prefix, out);
        prefix.pop_back();
    }
}

class EmbeddingSearcher {
public:
    explicit EmbeddingSearcher(const GramMatrix& gram) : gram_(gram), n_(gram.size()) { order_ = processing_order(); }

    EmbeddingSearch run() {
        EmbeddingSearch result;
        for (std::size_t i = 0; i < n_; ++i) result.column_bound += static_cast<std::size_t>(-gram_[i][i]);
        rows_.clear();
        columns_ = 0;
        if (place(0)) {
            DiagonalEmbedding e;
            e.dimension = columns_;
            e.vectors.assign(n_, Row(columns_, 0));
            for (std::size_t pos = 0; pos < n_; ++pos) e.vectors[order_[pos]] = rows_[pos];
            result.embedding = std::move(e);
        }
        result.nodes = nodes_;
        return result;
    }

private:
    // Greedy: next vector is the one with most nonzero pairings with those
    // already placed, ties broken by index.
    std::vector<std::size_t> processing_order() const {
        std::vector<std::size_t> order;
        std::vector<bool> used(n_, false);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t best = n_;
            int best_links = -1;
            for (std::size_t i = 0; i < n_; ++i) {
                if (used[i]) continue;
                int links = 0;
                for (auto j : order) links += gram_[i][j] != 0;
                if (links > best_links) {
                    best_links = links;
                    best = i;
                }
            }
            used[best] = true;
            order.push_back(best);
        }
        return order;
    }

    struct Frame {
        std::size_t pos;
        std::vector<std::int64_t> target;           // required sum x_c y_j[c], per placed row j
        std::vector<std::vector<std::int64_t>> tail;  // tail[j][c] = sum_{c' >= c} y_j[c']^2
        std::vector<long> class_prev;               // previous column with identical entries, or -1
        Row x;
        std::vector<std::int64_t> partial;
    };

    bool place(std::size_t pos) {
        ++nodes_;
        if (pos == n_) return true;
        const std::size_t i = order_[pos];

        Frame f;
        f.pos = pos;
        f.target.resize(pos);
        for (std::size_t j = 0; j < pos; ++j) f.target[j] = -gram_[i][order_[j]];
        f.tail.assign(pos, std::vector<std::int64_t>(columns_ + 1, 0));
        for (std::size_t j = 0; j < pos; ++j) {
            for (std::size_t c = columns_; c-- > 0;) f.tail[j][c] = f.tail[j][c + 1] + rows_[j][c] * rows_[j][c];
        }
        f.class_prev.assign(columns_, -1);
        for (std::size_t c = 0; c < columns_; ++c) {
            for (std::size_t c2 = c; c2-- > 0;) {
                bool same = true;
                for (std::size_t j = 0; j < pos && same; ++j) same = rows_[j][c] == rows_[j][c2];
                if (same) {
                    f.class_prev[c] = static_cast<long>(c2);
                    break;
                }
            }
        }
        f.x.assign(columns_, 0);
        f.partial.assign(pos, 0);
        return assign_column(f, 0, -gram_[i][i]);
    }

    bool assign_column(Frame& f, std::size_t c, std::int64_t rest) {
        if (c == columns_) {
            for (std::size_t j = 0; j < f.pos; ++j) {
                if (f.partial[j] != f.target[j]) return false;
            }
            return extend_fresh(f, rest);
        }
        const std::int64_t bound = isqrt(rest);
        std::int64_t hi = bound;
        if (f.class_prev[c] >= 0) hi = std::min(hi, f.x[static_cast<std::size_t>(f.class_prev[c])]);
        for (std::int64_t v = -bound; v <= hi; ++v) {
            const std::int64_t left = rest - v * v;
            bool feasible = true;
            for (std::size_t j = 0; j < f.pos; ++j) {
                const std::int64_t p = f.partial[j] + v * rows_[j][c];
                const std::int64_t gap = f.target[j] - p;
                // Cauchy-Schwarz on the unassigned columns.
                if (gap * gap > left * f.tail[j][c + 1]) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            f.x[c] = v;
            for (std::size_t j = 0; j < f.pos; ++j) f.partial[j] += v * rows_[j][c];
            const bool ok = assign_column(f, c + 1, left);
            for (std::size_t j = 0; j < f.pos; ++j) f.partial[j] -= v * rows_[j][c];
            if (ok) return true;
        }
        f.x[c] = 0;
        return false;
    }

    bool extend_fresh(Frame& f, std::int64_t rest) {
        std::vector<Row> parts;
        Row prefix;
        square_partitions(rest, rest, prefix, parts);
        for (const auto& part : parts) {
            const std::size_t old_columns = columns_;
            columns_ += part.size();
            for (auto& row : rows_) row.resize(columns_, 0);
            Row row = f.x;
            row.insert(row.end(), part.begin(), part.end());
            rows_.push_back(std::move(row));
            if (place(f.pos + 1)) return true;
            rows_.pop_back();
            columns_ = old_columns;
            for (auto& r : rows_) r.resize(columns_);
        }
        return false;
    }

    const GramMatrix& gram_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<Row> rows_;  // by processing position
    std::size_t columns_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

EmbeddingSearch search_diagonal_embedding(const Lattice& lattice) {
    const auto& gram = lattice.gram;
    for (const auto& row : gram) {
        if (row.size() != gram.size()) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not square");
    }
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not symmetric");
        }
    }
    if (!is_negative_definite(gram)) throw Error(ErrorKind::NotNegativeDefinite, "lattice is not negative definite");
    return EmbeddingSearcher(gram).run();
}

std::optional<DiagonalEmbedding> embeds_in_diagonal(const Lattice& lattice) {
    return search_diagonal_embedding(lattice).embedding;
}

ObstructionReport nonfillability_obstruction(long g) {
    const auto d = d_range(g);
    if (!d)
        throw Error(ErrorKind::NoValidD,
                    "no d >= 1 with d(d+1) <= 2g <= d(d+2) - 1 for g = " + std::to_string(g));
    ObstructionReport r;
    r.g = g;
    r.d = *d;
    r.q = *d + 2;
    r.lattice = lambda_q(r.q);
    r.search = search_diagonal_embedding(r.lattice);
    r.obstruction_holds = !r.search.embedding.has_value();
    return r;
}

}  // namespace seifert
