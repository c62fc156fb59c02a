#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opcalc/calculus.hpp"
#include "opcalc/comp_module.hpp"
#include "opcalc/matrix.hpp"

namespace opcalc {

// Coordinate frame for one chain degree: the full tensor basis or the
// complement basis of the degenerate subcomplex.
struct ChainFrame {
    int degree = 0;
    std::vector<MultiIndex> keys;
    std::map<MultiIndex, int> index;

    static ChainFrame build(const CompModule& m, int n, bool normalized) {
        ChainFrame fr;
        fr.degree = n;
        for (long k = 0; k < m.dim(n); ++k) {
            Chain b = m.basis_element(n, k);
            if (normalized && !(m.project_normalized(b) == b)) continue;
            const MultiIndex& key = b.terms.begin()->first;
            fr.index.emplace(key, static_cast<int>(fr.keys.size()));
            fr.keys.push_back(key);
        }
        return fr;
    }

    int dim() const { return static_cast<int>(keys.size()); }

    std::vector<Scalar> coords(const FieldSpec& f, const Chain& x) const {
        std::vector<Scalar> v(keys.size(), Scalar::zero(f));
        for (const auto& [k, c] : x.terms) {
            auto it = index.find(k);
            if (it == index.end())
                throw UsageError("chain term outside the coordinate frame");
            v[it->second] = c;
        }
        return v;
    }

    Chain chain(const std::vector<Scalar>& v) const {
        Chain x(degree);
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (!v[i].is_zero()) x.terms.emplace(keys[i], v[i]);
        return x;
    }
};

// Same for one cochain arity: entries are (tuple, coordinate in V).
struct CochainFrame {
    int arity = 0;
    std::vector<std::pair<MultiIndex, int>> slots;
    std::map<std::pair<MultiIndex, int>, int> index;

    static CochainFrame build(const Operad& o, int p, bool normalized) {
        CochainFrame fr;
        fr.arity = p;
        for (long k = 0; k < o.dim(p); ++k) {
            Cochain b = o.basis_element(p, k);
            if (normalized && !(o.project_normalized(b) == b)) continue;
            const auto& [key, vec] = *b.values.begin();
            int j = 0;
            for (std::size_t s = 0; s < vec.size(); ++s)
                if (!vec[s].is_zero()) j = static_cast<int>(s);
            fr.index.emplace(std::make_pair(key, j), static_cast<int>(fr.slots.size()));
            fr.slots.emplace_back(key, j);
        }
        return fr;
    }

    int dim() const { return static_cast<int>(slots.size()); }

    std::vector<Scalar> coords(const FieldSpec& f, const Cochain& phi) const {
        std::vector<Scalar> v(slots.size(), Scalar::zero(f));
        for (const auto& [key, vec] : phi.values)
            for (std::size_t j = 0; j < vec.size(); ++j) {
                if (vec[j].is_zero()) continue;
                auto it = index.find(std::make_pair(key, static_cast<int>(j)));
                if (it == index.end())
                    throw UsageError("cochain value outside the coordinate frame");
                v[it->second] = vec[j];
            }
        return v;
    }

    Cochain cochain(const FieldSpec& f, int dim_v, const std::vector<Scalar>& v) const {
        Cochain phi(arity);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (v[i].is_zero()) continue;
            Vec val = zero_vec(f, dim_v);
            val[slots[i].second] = v[i];
            phi.add_value(slots[i].first, val);
        }
        return phi;
    }
};

struct DegreeSummary {
    int degree = 0;
    long dim_space = 0;
    long dim_cycles = 0;
    long dim_boundaries = 0;
    long dim_homology = 0;
};

struct HomologyReport {
    std::vector<DegreeSummary> rows;
    std::vector<std::vector<Chain>> representatives;  // per degree

    std::vector<long> dims() const {
        std::vector<long> d;
        for (const auto& r : rows) d.push_back(r.dim_homology);
        return d;
    }
};

struct CohomologyReport {
    std::vector<DegreeSummary> rows;
    std::vector<std::vector<Cochain>> representatives;

    std::vector<long> dims() const {
        std::vector<long> d;
        for (const auto& r : rows) d.push_back(r.dim_homology);
        return d;
    }
};

// Optional on-disk store for assembled operator matrices, keyed by an
// instance fingerprint. Purely an optimization: a miss recomputes.
class MatrixCache {
  public:
    MatrixCache() = default;
    MatrixCache(std::string dir, std::string instance_key)
        : dir_(std::move(dir)), key_(std::move(instance_key)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<Matrix> load(const FieldSpec& f, const std::string& op_id, int degree) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path(op_id, degree));
        if (!in) return std::nullopt;
        int rows, cols;
        std::string field;
        if (!(in >> rows >> cols >> field) || field != f.str()) return std::nullopt;
        Matrix m(f, rows, cols);
        std::string tok;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (!(in >> tok)) return std::nullopt;
                m.at(r, c) = Scalar::parse(f, tok);
            }
        return m;
    }

    void store(const std::string& op_id, int degree, const Matrix& m) const {
        if (!enabled()) return;
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(dir_) / key_, ec);
        std::ofstream out(path(op_id, degree));
        if (!out) return;
        out << m.rows() << " " << m.cols() << " " << m.field().str() << "\n";
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).str();
            out << "\n";
        }
    }

  private:
    std::string path(const std::string& op_id, int degree) const {
        return (std::filesystem::path(dir_) / key_ / (op_id + "-" + std::to_string(degree) + ".mat"))
            .string();
    }

    std::string dir_;
    std::string key_;
};

// Assembles graded operators as exact matrices and answers rank, kernel,
// homology, and membership questions about them.
class HomologyEngine {
  public:
    HomologyEngine(const Operad& o, const CompModule& m, MatrixCache cache = {})
        : o_(o), m_(m), calc_(o, m), cache_(std::move(cache)) {}

    const FieldSpec& field() const { return m_.field(); }

    const ChainFrame& frame(int n, bool normalized) const {
        auto& slot = frames_[normalized ? 1 : 0];
        auto it = slot.find(n);
        if (it == slot.end())
            it = slot.emplace(n, ChainFrame::build(m_, n, normalized)).first;
        return it->second;
    }

    // Matrix of a chain operator C_n -> C_{out} in the chosen frames; on the
    // normalized complex the operator is projected after application.
    Matrix assemble(const std::function<Chain(const Chain&)>& f, int n, int out_degree,
                    bool normalized) const {
        const ChainFrame& src = frame(n, normalized);
        const ChainFrame& dst = frame(out_degree, normalized);
        Matrix mat(field(), dst.dim(), src.dim());
        for (int c = 0; c < src.dim(); ++c) {
            Chain img = f(Chain::basis(n, src.keys[c], field()));
            if (normalized) img = m_.project_normalized(img);
            if (img.is_zero()) continue;
            std::vector<Scalar> col = dst.coords(field(), img);
            for (int r = 0; r < dst.dim(); ++r) mat.at(r, c) = col[r];
        }
        return mat;
    }

    Matrix boundary_matrix(int n, bool normalized) const {
        const std::string op_id = normalized ? "b-nrm" : "b";
        if (auto cached = cache_.load(field(), op_id, n)) return *cached;
        Matrix m = assemble([&](const Chain& x) { return calc_.boundary(x); }, n,
                            n >= 1 ? n - 1 : 0, normalized);
        cache_.store(op_id, n, m);
        return m;
    }

    // Homology of (C_*, b) up to max_degree; boundary matrices one degree
    // above are needed, so the module cap must be at least max_degree + 1.
    // Computed on the normalized complex by default (same dimensions).
    HomologyReport homology(int max_degree, bool normalized = true) const {
        HomologyReport rep;
        for (int n = 0; n <= max_degree; ++n) {
            const ChainFrame& fr = frame(n, normalized);
            Matrix bn = boundary_matrix(n, normalized);
            Matrix bn1 = boundary_matrix(n + 1, normalized);
            if (!bn.times(bn1).is_zero())
                throw Error("boundary does not square to zero; refusing to compute homology");
            std::vector<std::vector<Scalar>> cycles =
                n == 0 ? identity_columns(fr.dim()) : bn.kernel_basis();
            std::vector<std::vector<Scalar>> bounds;
            for (int c = 0; c < bn1.cols(); ++c) bounds.push_back(bn1.column(c));
            std::vector<int> reps = quotient_representatives(field(), fr.dim(), bounds, cycles);
            DegreeSummary row;
            row.degree = n;
            row.dim_space = fr.dim();
            row.dim_cycles = static_cast<long>(cycles.size());
            row.dim_boundaries = static_cast<long>(bn1.rank());
            row.dim_homology = static_cast<long>(reps.size());
            rep.rows.push_back(row);
            std::vector<Chain> rchains;
            for (int idx : reps) rchains.push_back(fr.chain(cycles[idx]));
            rep.representatives.push_back(std::move(rchains));
        }
        return rep;
    }

    bool is_cocycle(const Cochain& phi) const { return coboundary(o_, phi).is_zero(); }

    bool is_cycle(const Chain& z, bool normalized) const {
        Chain bz = calc_.boundary(z);
        if (normalized) bz = m_.project_normalized(bz);
        return bz.is_zero();
    }

    // Boundary membership with certificate: y with b(y) = z (projected when
    // normalized). The certificate is verified before returning.
    std::pair<bool, Chain> is_boundary(const Chain& z, bool normalized) const {
        const int n = z.degree;
        if (z.is_zero()) return {true, Chain(n + 1)};
        Chain zz = normalized ? m_.project_normalized(z) : z;
        const ChainFrame& src = frame(n + 1, normalized);
        const ChainFrame& dst = frame(n, normalized);
        Matrix bn1 = boundary_matrix(n + 1, normalized);
        auto sol = bn1.solve(dst.coords(field(), zz));
        if (!sol) return {false, Chain(n + 1)};
        Chain y = src.chain(*sol);
        Chain check = calc_.boundary(y);
        if (normalized) check = m_.project_normalized(check);
        if (!(check == zz)) throw Error("boundary certificate failed verification");
        return {true, y};
    }

    // ----- cochain side -----

    const CochainFrame& cochain_frame(int p) const {
        auto it = cochain_frames_.find(p);
        if (it == cochain_frames_.end())
            it = cochain_frames_.emplace(p, CochainFrame::build(o_, p, false)).first;
        return it->second;
    }

    Matrix coboundary_matrix(int p) const {
        if (auto cached = cache_.load(field(), "delta", p)) return *cached;
        const CochainFrame& src = cochain_frame(p);
        const CochainFrame& dst = cochain_frame(p + 1);
        Matrix mat(field(), dst.dim(), src.dim());
        for (int c = 0; c < src.dim(); ++c) {
            Cochain img = coboundary(o_, o_.basis_element(p, c));
            if (img.is_zero()) continue;
            std::vector<Scalar> col = dst.coords(field(), img);
            for (int r = 0; r < dst.dim(); ++r) mat.at(r, c) = col[r];
        }
        cache_.store("delta", p, mat);
        return mat;
    }

    // Cohomology of (O^*, δ) up to max_arity (needs arity cap >= max+2 for
    // the coboundary of the top degree).
    CohomologyReport cohomology(int max_arity) const {
        CohomologyReport rep;
        const int dv =
            static_cast<int>(o_.basis_element(0, 0).values.begin()->second.size());
        for (int p = 0; p <= max_arity; ++p) {
            const CochainFrame& fr = cochain_frame(p);
            Matrix dp = coboundary_matrix(p);
            if (p + 1 <= max_arity + 1) {
                Matrix dp1 = coboundary_matrix(p + 1);
                if (!dp1.times(dp).is_zero())
                    throw Error("coboundary does not square to zero");
            }
            std::vector<std::vector<Scalar>> cocycles = dp.kernel_basis();
            std::vector<std::vector<Scalar>> cobounds;
            if (p >= 1) {
                Matrix prev = coboundary_matrix(p - 1);
                for (int c = 0; c < prev.cols(); ++c) cobounds.push_back(prev.column(c));
            }
            std::vector<int> reps = quotient_representatives(field(), fr.dim(), cobounds, cocycles);
            DegreeSummary row;
            row.degree = p;
            row.dim_space = fr.dim();
            row.dim_cycles = static_cast<long>(cocycles.size());
            row.dim_boundaries = p >= 1 ? coboundary_matrix(p - 1).rank() : 0;
            row.dim_homology = static_cast<long>(reps.size());
            rep.rows.push_back(row);
            std::vector<Cochain> rc;
            for (int idx : reps) rc.push_back(fr.cochain(field(), dv, cocycles[idx]));
            rep.representatives.push_back(std::move(rc));
        }
        return rep;
    }

    // ----- Connes cyclic homology over the signed cyclic operator -----

    // Homology of C_n / im(id - λ), λ = (-1)^n t, with the induced boundary.
    // Valid over characteristic zero; over F_p it is refused unless p exceeds
    // every relevant cyclic group order.
    HomologyReport connes_cyclic_homology(int max_degree) const {
        if (field().kind == FieldKind::PrimeField &&
            field().p <= static_cast<std::uint64_t>(max_degree) + 2)
            throw UsageError(
                "cyclic homology via the quotient complex needs characteristic 0 or p > max degree + 2");
        std::vector<ChainFrame> quot;      // complement coordinates per degree
        std::vector<std::vector<int>> sel; // chosen standard-basis indices
        std::vector<Matrix> lambda_im;     // columns spanning im(id - λ)
        for (int n = 0; n <= max_degree + 1; ++n) {
            const ChainFrame& fr = frame(n, false);
            Matrix q = assemble(
                [&](const Chain& x) { return x - signed_term(x.degree, cyclic_t(m_, x)); }, n, n,
                false);
            std::vector<std::vector<Scalar>> qcols;
            for (int c = 0; c < q.cols(); ++c)
                if (!is_zero_col(q, c)) qcols.push_back(q.column(c));
            std::vector<int> chosen =
                quotient_representatives(field(), fr.dim(), qcols, identity_columns(fr.dim()));
            sel.push_back(chosen);
            lambda_im.push_back(Matrix::from_columns(field(), fr.dim(), qcols));
            (void)quot;
        }
        // well-definedness: b maps im(id-λ) into im(id-λ) one degree lower
        for (int n = 1; n <= max_degree + 1; ++n) {
            for (int c = 0; c < lambda_im[n].cols(); ++c) {
                const ChainFrame& fr = frame(n, false);
                Chain u = fr.chain(lambda_im[n].column(c));
                Chain bu = calc_.boundary(u);
                if (bu.is_zero()) continue;
                auto ok = lambda_im[n - 1].cols() > 0
                              ? lambda_im[n - 1].solve(frame(n - 1, false).coords(field(), bu))
                              : std::nullopt;
                if (!ok)
                    throw Error("boundary does not preserve im(id - λ); quotient is ill-defined");
            }
        }
        // induced boundary matrices between quotient coordinates
        auto project = [&](int n, const Chain& x) {
            // coordinates of [x] on the chosen complement basis
            const ChainFrame& fr = frame(n, false);
            const auto& chosen = sel[n];
            std::vector<std::vector<Scalar>> cols;
            for (int c = 0; c < lambda_im[n].cols(); ++c) cols.push_back(lambda_im[n].column(c));
            for (int s : chosen) {
                std::vector<Scalar> e(fr.dim(), Scalar::zero(field()));
                e[s] = Scalar::one(field());
                cols.push_back(std::move(e));
            }
            Matrix solvem = Matrix::from_columns(field(), fr.dim(), cols);
            auto sol = solvem.solve(fr.coords(field(), x));
            if (!sol) throw Error("quotient projection failed");
            std::vector<Scalar> out(chosen.size(), Scalar::zero(field()));
            for (std::size_t i = 0; i < chosen.size(); ++i)
                out[i] = (*sol)[lambda_im[n].cols() + i];
            return out;
        };
        std::vector<Matrix> induced;  // induced[n]: quotient_n -> quotient_{n-1}
        for (int n = 0; n <= max_degree + 1; ++n) {
            const int src_dim = static_cast<int>(sel[n].size());
            const int dst_dim = n >= 1 ? static_cast<int>(sel[n - 1].size()) : 0;
            Matrix mat(field(), std::max(dst_dim, 0), src_dim);
            if (n >= 1) {
                const ChainFrame& fr = frame(n, false);
                for (int c = 0; c < src_dim; ++c) {
                    Chain x = Chain::basis(n, fr.keys[sel[n][c]], field());
                    std::vector<Scalar> col = project(n - 1, calc_.boundary(x));
                    for (int r = 0; r < dst_dim; ++r) mat.at(r, c) = col[r];
                }
            }
            induced.push_back(mat);
        }
        HomologyReport rep;
        for (int n = 0; n <= max_degree; ++n) {
            const int dim_n = static_cast<int>(sel[n].size());
            std::vector<std::vector<Scalar>> cycles =
                n == 0 ? identity_columns(dim_n) : induced[n].kernel_basis();
            std::vector<std::vector<Scalar>> bounds;
            for (int c = 0; c < induced[n + 1].cols(); ++c)
                bounds.push_back(induced[n + 1].column(c));
            std::vector<int> reps = quotient_representatives(field(), dim_n, bounds, cycles);
            DegreeSummary row;
            row.degree = n;
            row.dim_space = dim_n;
            row.dim_cycles = static_cast<long>(cycles.size());
            row.dim_boundaries = induced[n + 1].rank();
            row.dim_homology = static_cast<long>(reps.size());
            rep.rows.push_back(row);
            std::vector<Chain> rchains;
            const ChainFrame& fr = frame(n, false);
            for (int idx : reps) {
                Chain z(n);
                for (int i = 0; i < dim_n; ++i)
                    if (!cycles[idx][i].is_zero())
                        z.add_term(fr.keys[sel[n][i]], cycles[idx][i]);
                rchains.push_back(std::move(z));
            }
            rep.representatives.push_back(std::move(rchains));
        }
        return rep;
    }

  private:
    std::vector<std::vector<Scalar>> identity_columns(int n) const {
        std::vector<std::vector<Scalar>> cols;
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> e(n, Scalar::zero(field()));
            e[i] = Scalar::one(field());
            cols.push_back(std::move(e));
        }
        return cols;
    }

    static bool is_zero_col(const Matrix& m, int c) {
        for (int r = 0; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) return false;
        return true;
    }

    const Operad& o_;
    const CompModule& m_;
    Calculus calc_;
    MatrixCache cache_;
    mutable std::map<int, ChainFrame> frames_[2];
    mutable std::map<int, CochainFrame> cochain_frames_;
};

}  // namespace opcalc
