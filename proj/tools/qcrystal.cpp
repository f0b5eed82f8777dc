// Command-line surface for the decomposition of V(L0) (x) V(Li) over
// affine sl(n): enumeration of outer multiplicities, closed-form B-series
// via Cramer's rule, crystal operator exploration, and the verification
// suites.  Exit codes: 0 success / all checks pass, 1 verification
// mismatch, 2 usage or parameter error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcrystal/qcrystal.hpp"

namespace {

using namespace qcrystal;

int cmd_decompose(int n, int i, long max_boxes, const std::string& format) {
    MultiplicityTable tbl = multiplicity_table(n, i, max_boxes);
    if (format == "json")
        std::cout << table_to_json(tbl).dump(2) << "\n";
    else if (format == "csv")
        std::cout << table_to_csv(tbl);
    else
        std::cout << table_to_text(tbl);
    return 0;
}

QSeries enumerated_series(int n, int i, int t, long order) {
    long boxes = min_box_cost(n, i, t) + static_cast<long>(n) * order;
    MultiplicityTable tbl = multiplicity_table(n, i, boxes);
    QSeries s = series_from_table(tbl, t);
    return s.order() > order ? s.truncated(order) : s;
}

int cmd_series(int n, int i, int t, long order, const std::string& method) {
    check_t_range(n, i, t);
    bool want_cramer = method == "cramer" || method == "both";
    bool want_enum = method == "enumerate" || method == "both";
    if (want_cramer && !propmod_classify(n, i)) {
        std::cerr << "error: Cramer's rule is unavailable for n=" << n << ", i=" << i
                  << ": the residues (j-i)j mod n collide (see the propmod classification); "
                     "use --method enumerate\n";
        return 2;
    }
    std::optional<QSeries> se, sc;
    if (want_enum) {
        se = enumerated_series(n, i, t, order);
        std::cout << "B_" << t << "^" << i << "(q) [enumerate] = " << to_string(*se) << "\n";
    }
    if (want_cramer) {
        sc = cramer_B(n, i, t, order);
        std::cout << "B_" << t << "^" << i << "(q) [cramer]    = " << to_string(*sc) << "\n";
    }
    if (se && sc) {
        auto diff = first_difference(*se, *sc, 0, std::min(se->order(), sc->order()));
        if (diff) {
            std::cout << "MISMATCH at q^" << *diff << "\n";
            return 1;
        }
        std::cout << "MATCH through q^" << std::min(se->order(), sc->order()) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<long> order, std::optional<long> boxes) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& name) {
        if (name == "triple-product")
            return suite_triple_product(order.value_or(200));
        if (name == "shift-identity")
            return suite_shift_identity(order.value_or(60));
        if (name == "character-count")
            return suite_character_count(boxes.value_or(25));
        if (name == "oracle-equivalence")
            return suite_oracle_equivalence(boxes.value_or(14));
        if (name == "master")
            return suite_master(6, 4, order);
        if (name == "dets")
            return suite_dets(order.value_or(40));
        if (name == "closed-forms")
            return suite_closed_forms(order.value_or(40));
        if (name == "propmod")
            return suite_propmod(static_cast<int>(boxes.value_or(60)));
        if (name == "euler-n2")
            return suite_euler_n2(order.value_or(30));
        throw CLI::ValidationError("unknown suite '" + name + "'");
    };
    const std::vector<std::string> all = {"triple-product", "shift-identity", "character-count",
                                          "oracle-equivalence", "master", "dets", "closed-forms",
                                          "propmod", "euler-n2"};
    if (suite == "all") {
        for (const auto& s : all) {
            auto v = run(s);
            results.insert(results.end(), v.begin(), v.end());
        }
    } else {
        results = run(suite);
    }
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " " << c.params;
        if (!c.pass && !c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << "\n";
    }
    long failed = std::count_if(results.begin(), results.end(),
                                [](const CheckResult& c) { return !c.pass; });
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed ? 1 : 0;
}

void print_state(const ExtendedYoungDiagram& d) {
    std::cout << "partition: " << d.shape().to_string() << "  boxes: " << d.shape().box_count()
              << "  weight: " << d.weight().to_string() << "\n";
    for (int j = 0; j < d.rank(); ++j) {
        JSignature sig = d.signature(j);
        std::cout << "  j=" << j << ": raw " << to_string(sig.raw) << " | reduced "
                  << to_string(sig.reduced) << " | eps=" << sig.minus_count()
                  << " phi=" << sig.plus_count() << "\n";
    }
}

int cmd_crystal(int n, int charge, const std::string& partition, const std::string& word) {
    Partition p = Partition::parse(partition);
    ExtendedYoungDiagram d(p, charge, n);
    if (!d.regular()) {
        std::cerr << "error: diagram is not " << n << "-regular\n";
        return 2;
    }
    print_state(d);
    std::istringstream ws(word);
    std::string tok;
    while (ws >> tok) {
        if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'e'))
            throw CLI::ValidationError("bad operator token '" + tok + "' (expected f<j> or e<j>)");
        int j = 0;
        try {
            j = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad operator token '" + tok + "'");
        }
        if (j < 0 || j >= n) throw CLI::ValidationError("color out of range in '" + tok + "'");
        auto next = tok[0] == 'f' ? d.apply_f(j) : d.apply_e(j);
        std::cout << "apply " << tok << ":\n";
        if (!next) {
            std::cout << "0\n";
            return 0;
        }
        d = *next;
        print_state(d);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"outer multiplicities of V(L0) (x) V(Li) over affine sl(n); "
                 "exact q-series identities and crystal combinatorics"};
    app.require_subcommand(1);

    int n = 2, i = 0, t = 1;
    long max_boxes = 20, order = 12;
    std::string format = "text", method = "both", suite, partition, word;
    std::optional<long> opt_order, opt_boxes;

    auto* dec = app.add_subcommand("decompose", "enumerate the multiplicity table");
    dec->add_option("--n", n, "rank of affine sl(n)")->required();
    dec->add_option("--i", i, "charge / tensor factor index")->required();
    dec->add_option("--max-boxes", max_boxes, "enumeration bound on boxes");
    dec->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* ser = app.add_subcommand("series", "compute B_t^i(q)");
    ser->add_option("--n", n, "rank")->required();
    ser->add_option("--i", i, "charge")->required();
    ser->add_option("--t", t, "summand column t")->required();
    ser->add_option("--order", order, "series truncation order");
    ser->add_option("--method", method, "enumerate, cramer or both")
        ->check(CLI::IsMember({"enumerate", "cramer", "both"}));

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite,
                    "triple-product, shift-identity, character-count, oracle-equivalence, "
                    "master, dets, closed-forms, propmod, euler-n2, all")
        ->required();
    ver->add_option("--order", opt_order, "series order override");
    ver->add_option("--max-boxes", opt_boxes, "box / size bound override");

    auto* cry = app.add_subcommand("crystal", "apply Kashiwara operators step by step");
    cry->add_option("--n", n, "rank")->required();
    cry->add_option("--i", i, "charge")->required();
    cry->add_option("--partition", partition, "starting diagram, e.g. 5,4,1^2 (default empty)");
    cry->add_option("--word", word, "operator word, e.g. \"f1 f0 e1\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(n, i, max_boxes, format);
        if (ser->parsed()) return cmd_series(n, i, t, order, method);
        if (ver->parsed()) return cmd_verify(suite, opt_order, opt_boxes);
        if (cry->parsed()) return cmd_crystal(n, i, partition, word);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
