#include "muc/constants.hpp"

#include <stdexcept>

namespace muc {

bool Caps::covers(const Caps& need) const {
    return missing(need).empty();
}

std::string Caps::missing(const Caps& need) const {
    std::string out;
    auto check = [&](bool have, bool want, const char* n) {
        if (want && !have) out += out.empty() ? n : std::string(",") + n;
    };
    check(symmetric, need.symmetric, "symmetric");
    check(mix, need.mix, "mix");
    check(isomix, need.isomix, "isomix");
    check(compact, need.compact, "compact");
    check(duals, need.duals, "duals");
    check(cyclor, need.cyclor, "cyclor");
    check(dagger, need.dagger, "dagger");
    check(conjugation, need.conjugation, "conjugation");
    check(unitary, need.unitary, "unitary");
    return out;
}

Caps Caps::parse(const std::vector<std::string>& names) {
    Caps c;
    for (const auto& n : names) {
        if (n == "symmetric") c.symmetric = true;
        else if (n == "mix") c.mix = true;
        else if (n == "isomix") c.isomix = true;
        else if (n == "compact") c.compact = true;
        else if (n == "duals") c.duals = true;
        else if (n == "cyclor") c.cyclor = true;
        else if (n == "dagger") c.dagger = true;
        else if (n == "conjugation") c.conjugation = true;
        else if (n == "unitary") c.unitary = true;
        else throw std::invalid_argument("unknown capability: " + n);
    }
    return c;
}

namespace {

Caps need(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    for (auto* n : names) v.emplace_back(n);
    return Caps::parse(v);
}

std::vector<ConstInfo> build_table() {
    using K = ConstKind;
    return {
        {K::AOx, "a_ox", 3, "$0 (x) ($1 (x) $2)", "($0 (x) $1) (x) $2", "a⊗", {}},
        {K::AOxInv, "a_ox_inv", 3, "($0 (x) $1) (x) $2", "$0 (x) ($1 (x) $2)", "a⊗⁻¹", {}},
        {K::AOp, "a_op", 3, "$0 (+) ($1 (+) $2)", "($0 (+) $1) (+) $2", "a⊕", {}},
        {K::AOpInv, "a_op_inv", 3, "($0 (+) $1) (+) $2", "$0 (+) ($1 (+) $2)", "a⊕⁻¹", {}},
        {K::ULOx, "uL_ox", 1, "Top (x) $0", "$0", "u⊗ᴸ", {}},
        {K::ULOxInv, "uL_ox_inv", 1, "$0", "Top (x) $0", "(u⊗ᴸ)⁻¹", {}},
        {K::UROx, "uR_ox", 1, "$0 (x) Top", "$0", "u⊗ᴿ", {}},
        {K::UROxInv, "uR_ox_inv", 1, "$0", "$0 (x) Top", "(u⊗ᴿ)⁻¹", {}},
        {K::ULOp, "uL_op", 1, "Bot (+) $0", "$0", "u⊕ᴸ", {}},
        {K::ULOpInv, "uL_op_inv", 1, "$0", "Bot (+) $0", "(u⊕ᴸ)⁻¹", {}},
        {K::UROp, "uR_op", 1, "$0 (+) Bot", "$0", "u⊕ᴿ", {}},
        {K::UROpInv, "uR_op_inv", 1, "$0", "$0 (+) Bot", "(u⊕ᴿ)⁻¹", {}},
        {K::COx, "c_ox", 2, "$0 (x) $1", "$1 (x) $0", "c⊗", need({"symmetric"})},
        {K::COp, "c_op", 2, "$0 (+) $1", "$1 (+) $0", "c⊕", need({"symmetric"})},
        {K::DL, "dL", 3, "$0 (x) ($1 (+) $2)", "($0 (x) $1) (+) $2", "δᴸ", {}},
        {K::DR, "dR", 3, "($0 (+) $1) (x) $2", "$0 (+) ($1 (x) $2)", "δᴿ", {}},
        {K::M, "m", 0, "Bot", "Top", "m", need({"mix"})},
        {K::MInv, "m_inv", 0, "Top", "Bot", "m⁻¹", need({"mix", "isomix"})},
        {K::Mx, "mx", 2, "$0 (x) $1", "$0 (+) $1", "mx", need({"mix"})},
        {K::MxInv, "mx_inv", 2, "$0 (+) $1", "$0 (x) $1", "mx⁻¹", need({"mix", "isomix"})},
        {K::Eta, "eta", 1, "Top", "$0^* (+) $0", "η*", need({"duals"})},
        {K::Eps, "eps", 1, "$0 (x) $0^*", "Bot", "ε*", need({"duals"})},
        {K::REta, "reta", 1, "Top", "$0 (+) *^$0", "*η", need({"duals", "symmetric"})},
        {K::REps, "reps", 1, "*^$0 (x) $0", "Bot", "*ε", need({"duals", "symmetric"})},
        {K::Psi, "psi", 1, "$0^*", "*^$0", "ψ", need({"duals", "cyclor"})},
        {K::PsiInv, "psi_inv", 1, "*^$0", "$0^*", "ψ⁻¹", need({"duals", "cyclor"})},
        {K::LamOx, "lam_ox", 2, "dag($0) (x) dag($1)", "dag($0 (+) $1)", "λ⊗", need({"dagger"})},
        {K::LamOxInv, "lam_ox_inv", 2, "dag($0 (+) $1)", "dag($0) (x) dag($1)", "λ⊗⁻¹", need({"dagger"})},
        {K::LamOp, "lam_op", 2, "dag($0) (+) dag($1)", "dag($0 (x) $1)", "λ⊕", need({"dagger"})},
        {K::LamOpInv, "lam_op_inv", 2, "dag($0 (x) $1)", "dag($0) (+) dag($1)", "λ⊕⁻¹", need({"dagger"})},
        {K::LamTop, "lam_top", 0, "Top", "dag(Bot)", "λ⊤", need({"dagger"})},
        {K::LamTopInv, "lam_top_inv", 0, "dag(Bot)", "Top", "λ⊤⁻¹", need({"dagger"})},
        {K::LamBot, "lam_bot", 0, "Bot", "dag(Top)", "λ⊥", need({"dagger"})},
        {K::LamBotInv, "lam_bot_inv", 0, "dag(Top)", "Bot", "λ⊥⁻¹", need({"dagger"})},
        {K::Iota, "iota", 1, "$0", "dag(dag($0))", "ι", need({"dagger"})},
        {K::IotaInv, "iota_inv", 1, "dag(dag($0))", "$0", "ι⁻¹", need({"dagger"})},
        {K::Phi, "phi", 1, "$0", "dag($0)", "φ", need({"dagger", "unitary"})},
        {K::PhiInv, "phi_inv", 1, "dag($0)", "$0", "φ⁻¹", need({"dagger", "unitary"})},
        {K::ChiOx, "chi_ox", 2, "bar($0) (x) bar($1)", "bar($1 (x) $0)", "χ⊗", need({"conjugation"})},
        {K::ChiOxInv, "chi_ox_inv", 2, "bar($1 (x) $0)", "bar($0) (x) bar($1)", "χ⊗⁻¹", need({"conjugation"})},
        {K::ChiOp, "chi_op", 2, "bar($0 (+) $1)", "bar($1) (+) bar($0)", "χ⊕", need({"conjugation"})},
        {K::ChiOpInv, "chi_op_inv", 2, "bar($1) (+) bar($0)", "bar($0 (+) $1)", "χ⊕⁻¹", need({"conjugation"})},
        {K::Chi0Top, "chi0_top", 0, "Top", "bar(Top)", "χ°⊤", need({"conjugation"})},
        {K::Chi0TopInv, "chi0_top_inv", 0, "bar(Top)", "Top", "(χ°⊤)⁻¹", need({"conjugation"})},
        {K::Chi0Bot, "chi0_bot", 0, "Bot", "bar(Bot)", "χ°⊥", need({"conjugation"})},
        {K::Chi0BotInv, "chi0_bot_inv", 0, "bar(Bot)", "Bot", "(χ°⊥)⁻¹", need({"conjugation"})},
        {K::ConjEps, "conj_eps", 1, "bar(bar($0))", "$0", "ε (conjugator)", need({"conjugation"})},
        {K::ConjEpsInv, "conj_eps_inv", 1, "$0", "bar(bar($0))", "ε⁻¹ (conjugator)", need({"conjugation"})},
        {K::Sigma, "sigma", 1, "bar($0)^*", "bar($0^*)", "σ", need({"conjugation", "duals", "symmetric"})},
        {K::SigmaInv, "sigma_inv", 1, "bar($0^*)", "bar($0)^*", "σ⁻¹", need({"conjugation", "duals", "symmetric"})},
        {K::Omega, "omega", 1, "dag($0)^*", "dag($0^*)", "ω", need({"dagger", "duals", "symmetric"})},
        {K::OmegaInv, "omega_inv", 1, "dag($0^*)", "dag($0)^*", "ω⁻¹", need({"dagger", "duals", "symmetric"})},
        {K::Dualizor, "dualizor", 1, "$0", "$0^*^*", "dualizor", need({"duals", "symmetric"})},
        {K::DualizorInv, "dualizor_inv", 1, "$0^*^*", "$0", "dualizor⁻¹", need({"duals", "symmetric"})},
    };
}

}  // namespace

const std::vector<ConstInfo>& const_table() {
    static const std::vector<ConstInfo> table = build_table();
    return table;
}

const ConstInfo& const_info(ConstKind k) {
    const auto& t = const_table();
    auto idx = static_cast<std::size_t>(k);
    if (idx >= t.size() || t[idx].kind != k) throw std::logic_error("constant table out of order");
    return t[idx];
}

std::optional<ConstKind> const_by_name(const std::string& name) {
    for (const auto& c : const_table()) {
        if (name == c.name) return c.kind;
    }
    return std::nullopt;
}

std::optional<ConstKind> const_inverse(ConstKind k) {
    std::string n = const_info(k).name;
    const std::string suffix = "_inv";
    if (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return const_by_name(n.substr(0, n.size() - suffix.size()));
    }
    return const_by_name(n + suffix);
}

}  // namespace muc
