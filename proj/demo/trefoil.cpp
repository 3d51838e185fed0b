// Walk one minimal diagram through the pipeline: parse, read levels,
// expand to a classical diagram, evaluate and look the result up.

#include <iostream>

#include "tricross/tricross.hpp"

int main(int argc, char** argv) {
    using namespace tricross;
    const std::string text = argc > 1 ? argv[1] : "sPD[eY[4,2,5,5,1,6],eY[3,1,2,4,6,3]]";
    auto d = diagram_from_code(parse_spd(text));
    std::cout << "code      " << text << '\n' << "levels   ";
    for (const auto& l : d.levels) std::cout << ' ' << level_char(l[0]) << level_char(l[1]) << level_char(l[2]);
    auto e = expand(d);
    std::cout << "\nexpanded  " << serialize(e) << "\nF         " << kauffman_f(e).to_string() << '\n';

    auto ref = load_reference(std::string(TRICROSS_DATA_DIR) + "/reference_le10.csv");
    auto id = identify(e, ref);
    std::cout << "matches  ";
    if (id.trivial) std::cout << " trivial";
    for (int i : id.candidates) std::cout << ' ' << ref.entries[i].name;
    std::cout << '\n';

    auto th2 = generate_all(2).th.th;
    std::cout << th2.size() << " projections with two triple crossings, " << th2.size() * 36 << " diagrams\n";
}
