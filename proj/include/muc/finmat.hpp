#ifndef MUC_FINMAT_HPP
#define MUC_FINMAT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "muc/model.hpp"
#include "muc/scalar.hpp"

namespace muc {

enum class Web { Finite, NatProd, NatSq };

// Finiteness structure on the web. Fin/All for L x N; the NatSq tags on
// N x N name the finitary sets: FinRows = finitely many rows (first
// coordinates), FinCols = finitely many columns, RowFin = every row
// finite, ColFin = every column finite.
enum class FinTag { None, Fin, All, FinRows, FinCols, RowFin, ColFin };

std::string tag_name(FinTag t);
FinTag tag_dual(FinTag t);

struct FinSpace : ObjData {
    Web web = Web::Finite;
    std::vector<std::string> labels;  // finite factor; NatSq has one label
    FinTag tag = FinTag::None;

    FinSpace(Web w, std::vector<std::string> l, FinTag t) : web(w), labels(std::move(l)), tag(t) {}
    std::size_t fin() const { return labels.size(); }
    bool nat() const { return web != Web::Finite; }
    std::string describe() const override;
};

// Finite: (l); NatProd: (l, n); NatSq: (0, n, m).
struct WebIdx {
    std::size_t l = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    auto operator<=>(const WebIdx&) const = default;
};

/*
 * Supported matrices: finitely many entries plus an optional shared-N
 * diagonal tail, a fin(cod) x fin(dom) block repeated at every N index
 * (NatProd) or a scalar on the diagonal of N x N (NatSq). sparse holds the
 * deviation from the tail, so the representation is canonical.
 */
struct FinMatrix : MorData {
    std::map<std::pair<WebIdx, WebIdx>, GR> sparse;  // (row, col)
    std::optional<DenseMatrix> tail;

    GR entry(const WebIdx& row, const WebIdx& col) const;
};

struct FinVerdict {
    bool valid = true;
    std::string direction;  // "forward" or "backward" when invalid
    std::string witness;    // finitary set whose image escapes
    std::string reason;
};

FinVerdict fin_validate_map(const FinMatrix& f);

class FinmatModel : public Model {
public:
    std::string name() const override { return "finmat"; }
    Caps caps() const override;

    Obj top() const override;
    Obj bot() const override { return top(); }
    Obj tensor(const Obj& a, const Obj& b) const override;
    Obj par(const Obj& a, const Obj& b) const override;
    Obj dag(const Obj& a) const override { return dual(a); }
    Obj dual(const Obj& a) const override;
    Obj conj(const Obj& a) const override { return a; }
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

    static Obj finite(std::size_t dim, const std::string& prefix = "e");
    static Obj nat(FinTag tag);  // N with Fin or All
    static Obj space(Web w, std::vector<std::string> labels, FinTag tag);
    static const FinSpace& space_of(const Obj& a);
    static const FinMatrix& matrix_of(const Mor& f);

    // Normalizes and validates; throws ModelDefect for an unsupported or
    // invalid matrix.
    Mor make(const Obj& dom, const Obj& cod, std::map<std::pair<WebIdx, WebIdx>, GR> sparse,
             std::optional<DenseMatrix> tail) const;
    // Same, but returns the verdict instead of throwing on invalid support.
    static std::shared_ptr<FinMatrix> raw(const Obj& dom, const Obj& cod, std::map<std::pair<WebIdx, WebIdx>, GR> sparse,
                                          std::optional<DenseMatrix> tail);

private:
    // permutation map, perm[column] = row
    Mor structural(const Obj& dom, const Obj& cod, const std::vector<std::size_t>& perm) const;
    Mor kron(const Mor& f, const Mor& g, const Obj& dom, const Obj& cod) const;
};

// Index of (ia, ib) in the web of A (x) B (same for A (+) B).
WebIdx fin_pair_index(const FinSpace& a, const FinSpace& b, const WebIdx& ia, const WebIdx& ib);

struct FinCoreWitness {
    nlohmann::json forward;   // mx : N_Fin (x) N_All -> N_Fin (+) N_All
    bool forward_valid = false;
    bool mx_invertible = true;
    FinVerdict reverse;       // the identity the other way
    bool finite_mx_invertible = false;  // mx at finite webs
};

FinCoreWitness fin_core_witness(const FinmatModel& M);

}  // namespace muc

#endif
