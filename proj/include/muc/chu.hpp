#ifndef MUC_CHU_HPP
#define MUC_CHU_HPP

#include <map>
#include <memory>
#include <string>

#include "muc/model.hpp"
#include "muc/scalar.hpp"

namespace muc {

/*
 * A symmetric Chu object over framed spaces with dualizing object the
 * one-dimensional space: components A, B and a pairing <a,b> = a^T psi b.
 */
struct ChuObject : ObjData {
    std::size_t na = 0;
    std::size_t nb = 0;
    DenseMatrix psi;  // na x nb

    ChuObject(std::size_t a, std::size_t b, DenseMatrix p) : na(a), nb(b), psi(std::move(p)) {}
    std::string describe() const override;
};

// (f, g) : (A,B,psi) -> (A',B',psi') with f : A -> A', g : B' -> B
struct ChuMap : MorData {
    DenseMatrix f;  // na' x na
    DenseMatrix g;  // nb x nb'
};

// Second component of X (x) Y: pairs (h : X.A -> Y.B, k : Y.A -> X.B) with
// <a, k p>_X = <p, h a>_Y, as a nullspace basis in [vec h; vec k] layout
// (row-major blocks, h first).
struct PullbackBasis {
    DenseMatrix basis;  // (nyb*nxa + nxb*nya) x dim
    std::size_t nxa, nxb, nya, nyb;
    std::vector<std::size_t> free;  // basis is the identity on these rows
    DenseMatrix constraints;

    std::size_t dim() const { return basis.cols(); }
    std::size_t h_index(std::size_t q, std::size_t a) const { return q * nxa + a; }
    std::size_t k_index(std::size_t b, std::size_t p) const { return nyb * nxa + b * nya + p; }
};

// The constraint matrix whose nullspace is the tensor's second component.
DenseMatrix chu_tensor_constraints(const ChuObject& x, const ChuObject& y);

class ChuModel : public Model {
public:
    std::string name() const override { return "chu"; }
    Caps caps() const override;

    Obj top() const override;
    Obj bot() const override { return top(); }
    Obj tensor(const Obj& a, const Obj& b) const override;
    Obj par(const Obj& a, const Obj& b) const override;
    Obj dag(const Obj& a) const override { return conj(dual(a)); }
    Obj dual(const Obj& a) const override;
    Obj conj(const Obj& a) const override;
    bool obj_equal(const Obj& a, const Obj& b) const override;

    Mor id(const Obj& a) const override;
    Mor compose(const Mor& f, const Mor& g) const override;
    Mor tensor_map(const Mor& f, const Mor& g) const override;
    Mor par_map(const Mor& f, const Mor& g) const override;
    Mor dag_map(const Mor& f) const override { return conj_map(dual_map(f)); }
    Mor conj_map(const Mor& f) const override;
    Mor dual_map(const Mor& f) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    std::optional<Mor> inverse(const Mor& f) const override;

    Mor supply(ConstKind k, const std::vector<Obj>& args) const override;

    Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const override;
    nlohmann::json dump(const Mor& f) const override;

    static Obj object(DenseMatrix psi);
    // Validates (f, g) and throws ModelDefect when it is not a Chu map.
    Mor make(const Obj& dom, const Obj& cod, DenseMatrix f, DenseMatrix g) const;
    static const ChuObject& obj_of(const Obj& a);
    static const ChuMap& map_of(const Mor& m);

    const PullbackBasis& pullback(const Obj& x, const Obj& y) const;
    // Basis of Hom(X, Y) in [vec f; vec g] layout.
    DenseMatrix hom_basis(const Obj& x, const Obj& y) const;

private:
    std::vector<GR> coords(const PullbackBasis& pb, const std::vector<GR>& w) const;
    Mor assoc(const Obj& x, const Obj& y, const Obj& z) const;
    Mor unit_left(const Obj& x) const;
    Mor unit_right(const Obj& x) const;
    Mor sym(const Obj& x, const Obj& y) const;
    Mor dist_left(const Obj& x, const Obj& y, const Obj& z) const;
    Mor counit(const Obj& x) const;

    mutable std::map<std::pair<std::string, std::string>, std::unique_ptr<PullbackBasis>> pb_cache_;
    mutable std::map<std::pair<std::string, std::string>, Obj> tensor_cache_;
};

// Exact test of f^T psi' = psi g.
bool chu_check_map(const DenseMatrix& f, const DenseMatrix& g, const ChuObject& x, const ChuObject& y);

struct ChuPreunitary {
    Obj object;
    Mor alpha;
};

// (H, H, I) with alpha = (E, E^T) : X -> X^dag. Throws std::invalid_argument
// when E is not square or singular. Hermitian symmetry is not required here;
// the PREU law decides it.
ChuPreunitary chu_preunitary_from_form(const ChuModel& M, const DenseMatrix& e);
// E square, invertible, E = conj-transpose(E); the reason when not.
std::string chu_form_problem(const DenseMatrix& e);

}  // namespace muc

#endif
