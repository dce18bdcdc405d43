// Wire-protocol subject backed by the in-process engine:
//   tspga-subject CITIES.csv CONFIG.json  ->  one trace document on stdout
#include <fstream>
#include <iostream>
#include <sstream>

#include "tspga/city.hpp"
#include "tspga/engine.hpp"
#include "tspga/trace_io.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: " << argv[0] << " CITIES.csv CONFIG.json\n";
        return 2;
    }
    try {
        const auto cities = tspga::load_cities(argv[1]);
        std::ifstream in(argv[2], std::ios::binary);
        if (!in) throw std::runtime_error(std::string("cannot open config file ") + argv[2]);
        std::ostringstream ss;
        ss << in.rdbuf();
        const auto config = tspga::config_from_document(ss.str());
        std::cout << tspga::trace_to_document(tspga::run(cities, config));
    } catch (const std::exception& e) {
        std::cerr << "tspga-subject: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
