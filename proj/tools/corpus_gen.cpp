// Regenerates the JSON documents under corpus/ from the builders in
// fl::corpus. Run from the repository root: ./build/tools/fl_corpus_gen
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fl/corpus.hpp"
#include "fl/json_io.hpp"
#include "fl/pda.hpp"

namespace fs = std::filesystem;
using namespace fl;

namespace {
void write(const fs::path& dir, const std::string& name, const std::string& json) {
    std::ofstream f(dir / name, std::ios::binary);
    f << json;
    std::cout << "wrote " << (dir / name).string() << "\n";
}
}  // namespace

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? argv[1] : "corpus";
    fs::create_directories(dir);
    write(dir, "nobb_dfa.json", to_json(corpus::nobb_dfa()));
    write(dir, "nobb6_dfa.json", to_json(corpus::nobb6_dfa()));
    write(dir, "evenb_dfa.json", to_json(corpus::evenb_dfa()));
    write(dir, "nocba_dfa.json", to_json(corpus::no_c_before_a_dfa()));
    write(dir, "mod3_dfa.json", to_json(corpus::binary_mod3_dfa()));
    write(dir, "m3_nfa.json", to_json(corpus::m3_nfa()));
    write(dir, "l4_nfa.json", to_json(corpus::lk_nfa(4)));
    write(dir, "unary2_dfa.json", to_json(corpus::unary_multiple_dfa(2)));
    write(dir, "unary3_dfa.json", to_json(corpus::unary_multiple_dfa(3)));
    write(dir, "dyck1.json", to_json(corpus::dyck_grammar(1)));
    write(dir, "dyck2.json", to_json(corpus::dyck_grammar(2)));
    write(dir, "dyck3.json", to_json(corpus::dyck_grammar(3)));
    write(dir, "anbn.json", to_json(corpus::anbn_grammar()));
    write(dir, "palindrome.json", to_json(corpus::palindrome_grammar()));
    write(dir, "aeqb.json", to_json(corpus::aeqb_grammar()));
    write(dir, "ambn.json", to_json(corpus::ambn_grammar()));
    write(dir, "d1_ambiguous.json", to_json(corpus::d1_ambiguous_grammar()));
    write(dir, "d1plus_cnf.json", to_json(corpus::d1plus_cnf()));
    write(dir, "anbn_cnf.json", to_json(corpus::anbn_cnf()));
    write(dir, "endsb_rg.json", to_json(corpus::endsb_regular_grammar()));
    write(dir, "copy_csg.json", to_json(corpus::copy_csg()));
    write(dir, "anbncn_csg.json", to_json(corpus::anbncn_csg()));
    write(dir, "dyck1_pda.json", to_json(corpus::dyck_dpda(1)));
    write(dir, "anbn_dpda.json", to_json(corpus::anbn_dpda()));
    write(dir, "dyck3_dpda.json", to_json(corpus::dyck_dpda(3)));
    write(dir, "palindrome_npda.json", to_json(corpus::palindrome_npda()));
    write(dir, "aeqb_dca.json", to_json(corpus::aeqb_dca()));
    write(dir, "notpal_nca.json", to_json(corpus::not_palindrome_nca()));
    write(dir, "grid2_dca.json", to_json(corpus::grid2_dca()));
    write(dir, "anbn_tm.json", to_json(corpus::anbn_tm()));
    write(dir, "loop_tm.json", to_json(corpus::loop_tm()));
    write(dir, "rightscan_tm.json", to_json(corpus::rightscan_tm()));
    return 0;
}
