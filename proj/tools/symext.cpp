#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "symext/crystal.hpp"
#include "symext/ext.hpp"
#include "symext/functors.hpp"
#include "symext/meataxe.hpp"
#include "symext/verify.hpp"

using namespace symext;
using nlohmann::json;

namespace {

json abacusJson(const Abacus& g) {
    json j;
    j["p"] = g.p;
    j["beads"] = g.beads;
    return j;
}

json extReportJson(const ExtReport& r) {
    json j;
    j["partition"] = r.lam.str();
    j["p"] = r.p;
    j["method"] = r.method == ExtReport::Method::oracle ? "oracle" : "recursive";
    if (r.exact)
        j["dimExt"] = r.lower;
    else
        j["dimExt"] = {{"lower", r.lower}, {"upper", r.upper}};
    j["exact"] = r.exact;
    if (r.method == ExtReport::Method::oracle) {
        j["cocycle"] = {{"unknowns", r.cocycleUnknowns}, {"dimZ1", r.dimZ1}, {"dimB1", r.dimB1}};
    } else {
        json tr = json::array();
        for (const auto& te : r.trace)
            tr.push_back({{"level", te.level.str()},
                          {"i", te.residue},
                          {"eps", te.eps},
                          {"hom", te.homDimAtLevel}});
        j["trace"] = tr;
    }
    return j;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(path);
        os << j.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-group representation calculator"};
    app.require_subcommand(1);

    std::string cacheDir;
    bool force = false;
    u64 seed = 0x5eedbeefcafeULL;
    app.add_option("--cache", cacheDir, "module cache directory");
    app.add_flag("--force", force, "lift the dimension envelope guard");
    app.add_option("--seed", seed, "seed for randomized algorithms");

    std::string partText, jsonOut, method = "both";
    int p = 3, beads = -1, residue = 0, nMax = 5, jobs = 1;
    bool trace = false, allResidues = false;

    auto* cmdAbacus = app.add_subcommand("abacus", "display a partition on p runners");
    cmdAbacus->add_option("partition", partText)->required();
    cmdAbacus->add_option("-p", p, "prime")->required();
    cmdAbacus->add_option("--beads", beads, "bead count (default: smallest house display)");
    cmdAbacus->add_option("--json", jsonOut, "write JSON to a file ('-' for stdout only)");

    auto* cmdCrystal = app.add_subcommand("crystal", "signature and ladder operators at a residue");
    cmdCrystal->add_option("partition", partText)->required();
    cmdCrystal->add_option("-p", p, "prime")->required();
    cmdCrystal->add_option("-i", residue, "residue")->required();

    auto* cmdSep = app.add_subcommand("separated", "p-separation report");
    cmdSep->add_option("partition", partText)->required();
    cmdSep->add_option("-p", p, "prime")->required();
    cmdSep->add_option("--beads", beads, "bead count");

    auto* cmdRock = app.add_subcommand("rock-reduce", "runner-swap reduction to a Rouquier display");
    cmdRock->add_option("partition", partText)->required();
    cmdRock->add_option("-p", p, "prime")->required();
    cmdRock->add_flag("--trace", trace, "print every display along the way");
    cmdRock->add_option("--json", jsonOut, "write the trace as JSON");

    auto* cmdDec = app.add_subcommand("decompose", "composition factors of a Specht module");
    cmdDec->add_option("partition", partText)->required();
    cmdDec->add_option("-p", p, "prime")->required();

    auto* cmdExt = app.add_subcommand("selfext", "self-extension dimension of a simple module");
    cmdExt->add_option("partition", partText)->required();
    cmdExt->add_option("-p", p, "prime")->required();
    cmdExt->add_option("--method", method, "oracle | recursive | both");
    cmdExt->add_flag("--all-residues", allResidues, "tighten the recursive interval over all residues");
    cmdExt->add_option("--json", jsonOut, "write JSON to a file");

    std::string which;
    bool allDisplays = false;
    auto* cmdVerify = app.add_subcommand("verify", "theorem-level verification sweeps");
    cmdVerify->add_option("which", which, "A | B | C | corollary | lemmas")->required();
    cmdVerify->add_option("-p", p, "prime")->required();
    cmdVerify->add_option("-n", nMax, "largest degree")->required();
    cmdVerify->add_option("--json", jsonOut, "write the report as JSON");
    cmdVerify->add_option("--jobs", jobs, "case-level parallelism");
    cmdVerify->add_flag("--all-displays", allDisplays, "re-test separation on extra full rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (force)
            EnvelopeGuard::setMaxDim(0);
        Engine eng(Engine::Config{cacheDir, seed});

        if (cmdAbacus->parsed()) {
            Partition lam = parsePartition(partText);
            Abacus g = beads >= 0 ? displayOf(lam, p, beads) : defaultDisplay(lam, p);
            auto st = runnerStats(g);
            std::cout << g.render();
            std::cout << "beads " << g.str() << "\n";
            std::cout << "core " << coreOf(g).str() << "  weight " << st.weight() << "\n";
            std::cout << "quotient (";
            for (int i = 0; i < g.p; ++i)
                std::cout << (i ? ", " : "") << st.quotient[i].str();
            std::cout << ")\n";
            if (!jsonOut.empty())
                emit(abacusJson(g), jsonOut == "-" ? "" : jsonOut);
            return 0;
        }
        if (cmdCrystal->parsed()) {
            Partition lam = parsePartition(partText);
            require(residue >= 0 && residue < p, Err::BadInput, "residue out of range");
            auto sig = signature(lam, residue, p);
            auto prof = reduceSignature(sig);
            std::cout << "signature " << (sig.empty() ? "(empty)" : signatureString(sig)) << "\n";
            for (const auto& e : sig)
                std::cout << "  " << (e.sign == Sign::plus ? '+' : '-') << " (" << e.node.row << "," << e.node.col
                          << ")\n";
            std::cout << "eps " << prof.eps << "  phi " << prof.phi << "  eps' " << prof.epsPrime << "  phi' "
                      << prof.phiPrime << "\n";
            auto showNode = [](std::optional<Node> nd) {
                return nd ? "(" + std::to_string(nd->row) + "," + std::to_string(nd->col) + ")" : std::string("-");
            };
            std::cout << "good " << showNode(prof.good()) << "  cogood " << showNode(prof.cogood()) << "\n";
            auto et = tildeE(lam, residue, 1, p);
            auto ft = tildeF(lam, residue, 1, p);
            std::cout << "e-tilde " << (et ? et->str() : "0") << "  f-tilde " << (ft ? ft->str() : "0") << "\n";
            std::cout << "e-hat " << hatE(lam, residue, p).str() << "  f-hat " << hatF(lam, residue, p).str() << "\n";
            return 0;
        }
        if (cmdSep->parsed()) {
            Partition lam = parsePartition(partText);
            Abacus g = beads >= 0 ? displayOf(lam, p, beads) : defaultDisplay(lam, p);
            SeparationReport repSep = isPSeparated(lam, p, g);
            std::cout << g.render();
            std::cout << (repSep.separated ? "p-separated" : "not p-separated") << "\n";
            for (const auto& v : repSep.violations)
                std::cout << "  runners (" << v.i << "," << v.j << "): " << v.lhs << " > " << v.rhs << "\n";
            return repSep.separated ? 0 : 1;
        }
        if (cmdRock->parsed()) {
            Partition lam = parsePartition(partText);
            ReductionTrace tr = rockReduce(lam, p);
            std::cout << "start " << lam.str() << "  weight " << tr.weight << "\n";
            if (trace) {
                for (const auto& step : tr.steps) {
                    const char* kind = step.kind == ReductionStep::Kind::swap
                                           ? "swap"
                                           : (step.kind == ReductionStep::Kind::wrap ? "wrap" : "full-row");
                    std::cout << kind << " j=" << step.move.j << " -> " << step.move.to.str() << "\n"
                              << step.move.displayAfter.render();
                }
            }
            std::cout << "terminal " << tr.terminalPartition.str() << " on " << tr.terminal.str() << " ("
                      << tr.steps.size() << " steps)\n";
            if (!jsonOut.empty()) {
                json j;
                j["start"] = lam.str();
                j["weight"] = tr.weight;
                json steps = json::array();
                for (const auto& step : tr.steps)
                    steps.push_back({{"kind", step.kind == ReductionStep::Kind::swap
                                                  ? "swap"
                                                  : (step.kind == ReductionStep::Kind::wrap ? "wrap" : "fullRow")},
                                     {"j", step.move.j},
                                     {"from", step.move.from.str()},
                                     {"to", step.move.to.str()},
                                     {"displayBefore", abacusJson(step.move.displayBefore)},
                                     {"displayAfter", abacusJson(step.move.displayAfter)}});
                j["steps"] = steps;
                j["terminal"] = {{"partition", tr.terminalPartition.str()}, {"display", abacusJson(tr.terminal)}};
                emit(j, jsonOut == "-" ? "" : jsonOut);
            }
            return 0;
        }
        if (cmdDec->parsed()) {
            Partition lam = parsePartition(partText);
            auto factors = eng.spechtFactors(lam, p);
            std::cout << "S" << lam.str() << " over F_" << p << " (dim " << eng.specht(lam, p)->dim
                      << ", seed " << eng.seed() << ")\n";
            for (const auto& [mu, mult] : factors)
                std::cout << "  D" << mu.str() << " (dim " << eng.simple(mu, p)->dim << ") x " << mult << "\n";
            return 0;
        }
        if (cmdExt->parsed()) {
            Partition lam = parsePartition(partText);
            require(method == "oracle" || method == "recursive" || method == "both", Err::BadInput,
                    "--method must be oracle, recursive or both");
            json j = json::array();
            if (method == "oracle" || method == "both") {
                ExtReport r = eng.selfExtOracle(lam, p);
                std::cout << "oracle    dim Ext^1 = " << r.value() << "\n";
                j.push_back(extReportJson(r));
            }
            if (method == "recursive" || method == "both") {
                ExtReport r = eng.selfExtRecursive(lam, p, allResidues);
                if (r.exact)
                    std::cout << "recursive dim Ext^1 = " << r.lower << " (exact)\n";
                else
                    std::cout << "recursive dim Ext^1 in [" << r.lower << ", " << r.upper << "]\n";
                j.push_back(extReportJson(r));
            }
            if (!jsonOut.empty())
                emit(j, jsonOut == "-" ? "" : jsonOut);
            return 0;
        }
        if (cmdVerify->parsed()) {
            VerificationReport r;
            if (which == "A")
                r = verifyTheoremA(eng, p, nMax, jobs, allDisplays);
            else if (which == "B")
                r = verifyTheoremB(eng, p, nMax, jobs);
            else if (which == "C")
                r = verifyTheoremC(eng, p, nMax, jobs);
            else if (which == "corollary")
                r = verifyCorollaryShape(eng, p, nMax);
            else if (which == "lemmas")
                r = lemmaSuite(eng, p, nMax, jobs);
            else
                fail(Err::BadInput, "verify target must be A, B, C, corollary or lemmas");
            std::cout << "verify " << which << " p=" << p << " n<=" << nMax << ": " << r.count("pass") << " pass, "
                      << r.count("fail") << " fail, " << r.count("skip") << " skip (" << r.wallMs << " ms)\n";
            for (const auto& c : r.cases)
                if (c.status == "fail")
                    std::cout << "  FAIL " << c.key << ": " << c.reason << "\n";
            if (!jsonOut.empty())
                emit(r.toJson(), jsonOut == "-" ? "" : jsonOut);
            return r.ok() ? 0 : 1;
        }
    } catch (const SymError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Err::BadInput || e.code() == Err::EnvelopeExceeded ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
