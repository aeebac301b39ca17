#ifndef MUC_FFVEC_HPP
#define MUC_FFVEC_HPP

#include <string>
#include <vector>

#include "muc/model.hpp"
#include "muc/scalar.hpp"

namespace muc {

struct FramedSpace : ObjData {
    std::vector<std::string> labels;

    explicit FramedSpace(std::vector<std::string> l) : labels(std::move(l)) {}
    std::size_t dim() const { return labels.size(); }
    std::string describe() const override;
};

struct FVMorphism : MorData {
    DenseMatrix matrix;  // cod.dim x dom.dim
};

// Single-constant faults for checking that the law suite notices.
enum class FfvecMutation {
    None,
    ScaleLamTop,       // lam_top = 2
    TransposePhi,      // phi exchanges the first two frame vectors
    SwapDeltaL,        // dL permutes the B and C factors
    DropConjInDagger,  // f^dag = transpose, no conjugation
    PermuteEta,        // eta pairs e_i^* with e_{i+1}
};

std::string mutation_name(FfvecMutation m);
std::vector<FfvecMutation> all_mutations();

/*
 * Framed finite-dimensional spaces over Q[i]. Tensor and par coincide,
 * with Kronecker products in lexicographic frame order. Every frame
 * identification (dual of dual, tensor of duals, conjugates) is the
 * identity matrix; the symmetries are swap permutations.
 */
class FfvecModel : public Model {
public:
    explicit FfvecModel(FfvecMutation mutation = FfvecMutation::None) : mutation_(mutation) {}

    std::string name() const override;
    Caps caps() const override;

    Obj top() const override;
    Obj bot() const override { return top(); }
    Obj tensor(const Obj& a, const Obj& b) const override;
    Obj par(const Obj& a, const Obj& b) const override { return tensor(a, b); }
    Obj dag(const Obj& a) const override;
    Obj dual(const Obj& a) const override;
    Obj conj(const Obj& a) const override;
    bool obj_equal(const Obj& a, const Obj& b) const override;

    Mor id(const Obj& a) const override;
    Mor compose(const Mor& f, const Mor& g) const override;
    Mor tensor_map(const Mor& f, const Mor& g) const override;
    Mor par_map(const Mor& f, const Mor& g) const override { return tensor_map(f, g); }
    Mor dag_map(const Mor& f) const override;
    Mor conj_map(const Mor& f) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    std::optional<Mor> inverse(const Mor& f) const override;
    Mor dual_map(const Mor& f) const override;

    Mor supply(ConstKind k, const std::vector<Obj>& args) const override;
    bool is_unitary(const Obj&) const override { return true; }

    Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const override;
    Mor random_unitary(const Obj& a, Rng& rng) const override;
    nlohmann::json dump(const Mor& f) const override;

    static Obj space(std::size_t dim, const std::string& prefix = "e");
    static Obj space(std::vector<std::string> labels);
    Mor make(const Obj& dom, const Obj& cod, DenseMatrix m) const;
    static const DenseMatrix& matrix_of(const Mor& f);
    static std::size_t dim_of(const Obj& a);

private:
    Mor swap(const Obj& a, const Obj& b, const Obj& dom, const Obj& cod) const;

    FfvecMutation mutation_;
};

// Unit-modulus entries of Q[i] used for constructed unitaries.
const std::vector<GR>& unit_modulus_entries();
// A signed permutation matrix with the given entries on a permutation.
DenseMatrix random_phase_permutation(std::size_t n, Rng& rng);

// f unitary per the matrix test: conj-transpose equals inverse.
bool ffvec_unitary_iff_matrix(const DenseMatrix& m);

}  // namespace muc

#endif
