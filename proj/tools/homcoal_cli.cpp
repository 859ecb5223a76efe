// Command-line front end: check bundle files, run the constructions, solve
// for (co)derivation spaces, search for operators and generate instances.
//
// Exit codes: 0 all good, 1 semantic failure (failed check, refused
// construction, exceeded guard, bad argument), 2 I/O or parse failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <homcoal/homcoal.hpp>

namespace {

using namespace homcoal;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitIo = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
    if (!out_path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw parse_error("cannot write '" + *out_path + "'");
    out << text;
}

std::string format_vector(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rational_to_string(v[i]);
    }
    return s + "]";
}

std::string format_index(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

void print_reports(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.passed) {
            std::cout << r.identity_name << " PASS\n";
        } else {
            std::cout << r.identity_name << " FAIL";
            if (r.witness)
                std::cout << " witness=" << format_index(r.witness->input_index)
                          << " lhs=" << format_vector(r.witness->lhs)
                          << " rhs=" << format_vector(r.witness->rhs);
            std::cout << "\n";
        }
    }
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_rational(item));
    if (grid.empty()) throw argument_error("empty grid");
    return grid;
}

LinMap named_operator(const std::string& name, const TensorSpace& space,
                      const std::optional<LinMap>& from_bundle, const std::string& flag) {
    if (name == "identity") return LinMap::identity(space);
    if (name == "zero") return LinMap::zero(space, space);
    if (!name.empty())
        throw argument_error(flag + " must be 'identity' or 'zero' (got '" + name + "')");
    if (from_bundle) return *from_bundle;
    throw argument_error("construction needs " + flag +
                         "=identity|zero or the matrix embedded in the bundle");
}

StructureBundle with_construction_metadata(StructureBundle b, const std::string& kind) {
    b.metadata["construction"] = kind;
    b.metadata["checks"] = reports_summary(check_bundle(b));
    return b;
}

int cmd_check(const std::string& path, bool as_json) {
    const StructureBundle b = parse_bundle(read_file(path));
    const auto reports = check_bundle(b);
    if (as_json)
        std::cout << reports_to_json(reports).dump(2) << "\n";
    else
        print_reports(reports);
    return all_passed(reports) ? kExitOk : kExitSemantic;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& inputs,
                  const std::optional<std::string>& out_path, const std::string& lambda_text,
                  const std::string& r_name, const std::string& t_name) {
    const auto need_inputs = [&](std::size_t count) {
        if (inputs.size() != count)
            throw argument_error("construct " + kind + " takes " + std::to_string(count) +
                                 " input bundle(s), got " + std::to_string(inputs.size()));
    };
    const auto load = [&](std::size_t i) { return parse_bundle(read_file(inputs[i])); };

    StructureBundle out;
    if (kind == "dualize") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor == BundleFlavor::lie) {
            out = bundle_from_der_pair(dualize_coder_pair(bundle_coder_pair(b)));
        } else if (b.flavor == BundleFlavor::coassociative) {
            const CoDerPair p = bundle_coder_pair(b);
            detail::require_all("dualize input", detail::ass_pair_reports(p));
            out = bundle_from_der_pair(
                DerPair{dualize_coalgebra(p.coalg), transpose(p.phi)});
        } else if (b.flavor == BundleFlavor::lie_algebra) {
            out = bundle_from_pair(dualize_der_pair(bundle_der_pair(b)), BundleFlavor::lie);
        } else if (b.flavor == BundleFlavor::associative_algebra) {
            const DerPair p = bundle_der_pair(b);
            out = bundle_from_pair(CoDerPair{dualize_algebra(p.alg), transpose(p.phi)},
                                   BundleFlavor::coassociative);
        } else {
            throw argument_error("dualize expects a lie/coassociative bundle on either side");
        }
        out.metadata["duality"] = duality_certificate(inputs[0], "", true).note;
    } else if (kind == "adjoint-comodule") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::lie)
            throw argument_error("adjoint-comodule expects a lie bundle");
        out = bundle_from_coder_comodule(adjoint_comodule(bundle_coder_pair(b)));
    } else if (kind == "semidirect") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::coder_comodule)
            throw argument_error("semidirect expects a coder_comodule bundle "
                                 "(carrying its base pair)");
        const CoDerComodule m = bundle_coder_comodule(b);
        out = bundle_from_pair(semidirect_coalgebra(m.pair, m), BundleFlavor::lie);
    } else if (kind == "dsum") {
        need_inputs(2);
        const StructureBundle b1 = load(0), b2 = load(1);
        if (b1.flavor != b2.flavor)
            throw argument_error("dsum inputs must share a flavor");
        if (!is_coalgebra_flavor(b1.flavor) || b1.flavor == BundleFlavor::coder_comodule)
            throw argument_error("dsum expects coalgebra-side bundles");
        out = bundle_from_pair(
            direct_sum_coder_pairs(bundle_coder_pair(b1), bundle_coder_pair(b2)), b1.flavor);
    } else if (kind == "dsum-alg") {
        need_inputs(2);
        const StructureBundle b1 = load(0), b2 = load(1);
        if (b1.flavor != BundleFlavor::lie_algebra || b2.flavor != BundleFlavor::lie_algebra)
            throw argument_error("dsum-alg expects two lie_algebra bundles");
        out = bundle_from_der_pair(
            direct_sum_der_pairs(bundle_der_pair(b1), bundle_der_pair(b2)));
    } else if (kind == "commutator-prelie") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::pre_lie)
            throw argument_error("commutator-prelie expects a pre_lie bundle");
        out = bundle_from_pair(commutator_pre_lie_to_lie(bundle_coder_pair(b)),
                               BundleFlavor::lie);
    } else if (kind == "commutator-ass") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::coassociative)
            throw argument_error("commutator-ass expects a coassociative bundle");
        out = bundle_from_pair(commutator_ass_to_lie(bundle_coder_pair(b)),
                               BundleFlavor::lie);
    } else if (kind == "rb-twist") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::coassociative)
            throw argument_error("rb-twist expects a coassociative bundle");
        const CoDerPair p = bundle_coder_pair(b);
        const LinMap r = named_operator(r_name, p.coalg.space(), b.rb_r, "--R");
        Rational lambda;
        if (!lambda_text.empty())
            lambda = parse_rational(lambda_text);
        else if (b.rb_weight)
            lambda = *b.rb_weight;
        else
            throw argument_error("rb-twist needs --lambda or a lambda in the bundle");
        out = bundle_from_pair(rb_twist(p, RotaBaxterData{r, lambda}),
                               BundleFlavor::pre_lie);
    } else if (kind == "endo-twist") {
        need_inputs(1);
        const StructureBundle b = load(0);
        if (b.flavor != BundleFlavor::coassociative)
            throw argument_error("endo-twist expects a coassociative bundle");
        const CoDerPair p = bundle_coder_pair(b);
        const LinMap t = named_operator(t_name, p.coalg.space(), b.endo_t, "--T");
        out = bundle_from_pair(endo_twist(p, EndoOp{t, true, true}), BundleFlavor::lie);
    } else {
        throw argument_error(
            "unknown construction '" + kind +
            "' (expected semidirect, dsum, dsum-alg, commutator-prelie, commutator-ass, "
            "rb-twist, endo-twist, adjoint-comodule or dualize)");
    }
    write_output(out_path, serialize_bundle(with_construction_metadata(out, kind)));
    return kExitOk;
}

int cmd_solve(const std::string& kind, const std::string& path, bool as_json) {
    const StructureBundle b = parse_bundle(read_file(path));
    OperatorSpaceBasis basis;
    if (kind == "coder") {
        if (!is_coalgebra_flavor(b.flavor))
            throw argument_error("solve coder expects a coalgebra-side bundle");
        basis = coderivation_basis(bundle_coalgebra(b));
    } else if (kind == "der") {
        if (is_coalgebra_flavor(b.flavor))
            throw argument_error("solve der expects an algebra-side bundle");
        basis = derivation_basis(bundle_algebra(b));
    } else {
        throw argument_error("solve kind must be 'coder' or 'der'");
    }
    if (as_json) {
        nlohmann::json j;
        j["dimension"] = basis.dimension();
        j["identity"] = basis.identity_tag;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : basis.basis) arr.push_back(io_detail::matrix_to_json(m));
        j["basis"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << basis.dimension() << "\n";
        for (const auto& m : basis.basis)
            std::cout << io_detail::matrix_to_json(m).dump() << "\n";
    }
    return kExitOk;
}

int cmd_search_operators(const std::string& path, const std::string& kind_name,
                         const std::string& lambda_text, const std::string& grid_text,
                         const std::optional<std::string>& out_path, bool as_json) {
    const StructureBundle b = parse_bundle(read_file(path));
    if (!is_coalgebra_flavor(b.flavor))
        throw argument_error("operator search expects a coalgebra-side bundle");
    const HomCoalgebra c = bundle_coalgebra(b);
    OperatorKind kind;
    Rational lambda(0);
    if (kind_name == "rb") {
        kind = OperatorKind::rota_baxter;
        if (lambda_text.empty())
            throw argument_error("--kind rb needs --lambda");
        lambda = parse_rational(lambda_text);
    } else if (kind_name == "endo") {
        kind = OperatorKind::endo;
    } else {
        throw argument_error("--kind must be 'rb' or 'endo'");
    }
    const auto grid = parse_grid(grid_text.empty() ? "-1,0,1" : grid_text);
    const auto found = search_operators(c, kind, lambda, grid);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : found) arr.push_back(io_detail::matrix_to_json(m));
    if (out_path) {
        write_output(out_path, arr.dump(2) + "\n");
    } else if (as_json) {
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "found " << found.size() << " operator(s)\n";
        for (const auto& m : found) std::cout << io_detail::matrix_to_json(m).dump() << "\n";
    }
    return kExitOk;
}

int cmd_search_generate(const std::string& flavor_name_, int dim, std::uint64_t seed,
                        const std::string& strategy_name_,
                        const std::optional<std::string>& out_path) {
    GenerationRecipe recipe;
    recipe.flavor = flavor_from_name(flavor_name_);
    recipe.dim = dim;
    recipe.seed = seed;
    if (strategy_name_ == "auto") {
        // seeded pick among the strategies that can hit the dimension
        std::vector<Strategy> pool{Strategy::classical_dual, Strategy::twist};
        if (dim >= 2) pool.push_back(Strategy::sum_closure);
        recipe.strategy = pool[seed % pool.size()];
    } else if (strategy_name_ == "zero") {
        recipe.strategy = Strategy::zero;
    } else if (strategy_name_ == "classical_dual") {
        recipe.strategy = Strategy::classical_dual;
    } else if (strategy_name_ == "twist") {
        recipe.strategy = Strategy::twist;
    } else if (strategy_name_ == "sum_closure") {
        recipe.strategy = Strategy::sum_closure;
    } else if (strategy_name_ == "semidirect_closure") {
        recipe.strategy = Strategy::semidirect_closure;
    } else {
        throw argument_error("unknown strategy '" + strategy_name_ + "'");
    }
    write_output(out_path, serialize_bundle(generate(recipe)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for Hom-(co)algebraic structures"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string check_path;
    auto* check = app.add_subcommand("check", "run every applicable identity checker");
    check->add_option("file", check_path, "bundle file")->required();

    std::string construct_kind;
    std::vector<std::string> construct_inputs;
    std::string lambda_text, r_name, t_name;
    std::optional<std::string> out_path;
    auto* construct = app.add_subcommand("construct", "build a new bundle and re-check it");
    construct->add_option("kind", construct_kind, "construction kind")->required();
    construct->add_option("inputs", construct_inputs, "input bundle file(s)");
    construct->add_option("--out", out_path, "output file (default stdout)");
    construct->add_option("--lambda", lambda_text, "Rota-Baxter weight");
    construct->add_option("--R", r_name, "Rota-Baxter operator: identity|zero");
    construct->add_option("--T", t_name, "endomorphism operator: identity|zero");

    std::string solve_kind, solve_path;
    auto* solve = app.add_subcommand("solve", "basis of the (co)derivation space");
    solve->add_option("kind", solve_kind, "coder|der")->required();
    solve->add_option("file", solve_path, "bundle file")->required();

    std::string search_target, search_kind, grid_text, strategy_text = "auto";
    int search_dim = 2;
    std::uint64_t search_seed = 0;
    auto* search = app.add_subcommand(
        "search", "generate a validated bundle, or enumerate operators over a grid");
    search->add_option("target", search_target,
                       "flavor to generate, or bundle file with --kind")->required();
    search->add_option("--kind", search_kind, "operator search: rb|endo");
    search->add_option("--grid", grid_text, "comma-separated rational grid");
    search->add_option("--lambda", lambda_text, "Rota-Baxter weight for --kind rb");
    search->add_option("--dim", search_dim, "dimension for generation");
    search->add_option("--seed", search_seed, "generation seed");
    search->add_option("--strategy", strategy_text,
                       "zero|classical_dual|twist|sum_closure|semidirect_closure|auto");
    search->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_path, as_json);
        if (construct->parsed())
            return cmd_construct(construct_kind, construct_inputs, out_path, lambda_text,
                                 r_name, t_name);
        if (solve->parsed()) return cmd_solve(solve_kind, solve_path, as_json);
        if (search->parsed()) {
            if (!search_kind.empty())
                return cmd_search_operators(search_target, search_kind, lambda_text,
                                            grid_text, out_path, as_json);
            return cmd_search_generate(search_target, search_dim, search_seed,
                                       strategy_text, out_path);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const refused_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_reports(e.reports());
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitSemantic;
}
