#ifndef MUC_CONSTANTS_HPP
#define MUC_CONSTANTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace muc {

/*
 * Capability flags of a model. Each structural constant requires a subset.
 */
struct Caps {
    bool symmetric = false;
    bool mix = false;
    bool isomix = false;
    bool compact = false;
    bool duals = false;
    bool cyclor = false;
    bool dagger = false;
    bool conjugation = false;
    bool unitary = false;

    bool covers(const Caps& need) const;
    std::string missing(const Caps& need) const;
    static Caps parse(const std::vector<std::string>& names);
};

// Structural constant vocabulary. The ascii names are the stable public
// spelling used by laws and by the expression language.
enum class ConstKind {
    AOx, AOxInv, AOp, AOpInv,
    ULOx, ULOxInv, UROx, UROxInv,
    ULOp, ULOpInv, UROp, UROpInv,
    COx, COp,
    DL, DR,
    M, MInv,
    Mx, MxInv,
    Eta, Eps, REta, REps,
    Psi, PsiInv,
    LamOx, LamOxInv, LamOp, LamOpInv,
    LamTop, LamTopInv, LamBot, LamBotInv,
    Iota, IotaInv,
    Phi, PhiInv,
    ChiOx, ChiOxInv, ChiOp, ChiOpInv,
    Chi0Top, Chi0TopInv, Chi0Bot, Chi0BotInv,
    ConjEps, ConjEpsInv,
    Sigma, SigmaInv,
    Omega, OmegaInv,
    Dualizor, DualizorInv,
};

struct ConstInfo {
    ConstKind kind;
    const char* name;
    int arity;
    // dom and cod in object syntax over the placeholders $0, $1, $2
    const char* dom;
    const char* cod;
    const char* symbol;  // conventional mathematical symbol
    Caps needs;
};

const std::vector<ConstInfo>& const_table();
const ConstInfo& const_info(ConstKind k);
std::optional<ConstKind> const_by_name(const std::string& name);
// For kinds with a two-sided inverse in the vocabulary.
std::optional<ConstKind> const_inverse(ConstKind k);

}  // namespace muc

#endif
