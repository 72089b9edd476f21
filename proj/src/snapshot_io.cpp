#include "strato/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace strato {

namespace {

static_assert(sizeof(double) == 8);

void write_le(std::ostream& os, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    os.write(reinterpret_cast<const char*>(&bits), 8);
}

double read_le(std::istream& is) {
    uint64_t bits;
    is.read(reinterpret_cast<char*>(&bits), 8);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void write_snapshot(const std::string& path, const Field4& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    const GridSpec& g = f.grid();
    os << "strato-field 1\n";
    os << "grid " << g.n1 << " " << g.n2 << " " << g.n3 << "\n";
    os.precision(17);
    os << "period " << g.L1 << " " << g.L2 << " " << g.L3 << "\n";
    os << "components 4\n";
    os << "endianness little\n\n";
    for (int c = 0; c < 4; ++c)
        for (const cplx& v : f.comp(c)) {
            write_le(os, v.real());
            write_le(os, v.imag());
        }
    if (!os) throw std::runtime_error("write failed: " + path);
}

Field4 read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    std::getline(is, line);
    if (line.rfind("strato-field", 0) != 0)
        throw std::runtime_error("not a strato field snapshot: " + path);
    int n1 = 0, n2 = 0, n3 = 0, nc = 0;
    double L1 = 0, L2 = 0, L3 = 0;
    while (std::getline(is, line) && !line.empty()) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "grid") ls >> n1 >> n2 >> n3;
        else if (key == "period") ls >> L1 >> L2 >> L3;
        else if (key == "components") ls >> nc;
        else if (key == "endianness") {
            std::string e;
            ls >> e;
            if (e != "little") throw std::runtime_error("unsupported endianness: " + e);
        }
    }
    if (nc != 4) throw std::runtime_error("snapshot component count != 4");
    Field4 f(GridSpec(n1, n2, n3, L1, L2, L3));
    for (int c = 0; c < 4; ++c)
        for (cplx& v : f.comp(c)) {
            double re = read_le(is), im = read_le(is);
            v = {re, im};
        }
    if (!is) throw std::runtime_error("snapshot truncated: " + path);
    return f;
}

}  // namespace strato
