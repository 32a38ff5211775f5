#include "embfp/ecf.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace embfp {

namespace {

constexpr char kMagic[4] = {'E', 'C', 'F', '1'};

void put_u32_le(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32_le(const unsigned char* b) {
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ostream& os, double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64_le(const unsigned char* b) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

}  // namespace

void write_ecf(const std::string& path, const Cloud& cloud) {
    check_cloud(cloud);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u32_le(os, static_cast<std::uint32_t>(cloud.rows()));
    put_u32_le(os, static_cast<std::uint32_t>(cloud.cols()));
    for (Eigen::Index i = 0; i < cloud.rows(); ++i)
        for (Eigen::Index j = 0; j < cloud.cols(); ++j) put_f64_le(os, cloud(i, j));
    if (!os) throw std::runtime_error("write failed: " + path);
}

Cloud read_ecf(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::vector<unsigned char> raw((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
    if (raw.size() < 12 || std::memcmp(raw.data(), kMagic, 4) != 0)
        throw std::runtime_error("not an ECF file: " + path);
    const std::uint64_t N = get_u32_le(raw.data() + 4);
    const std::uint64_t n = get_u32_le(raw.data() + 8);
    if (N < 1 || n < 2) throw std::runtime_error("ECF header has invalid shape: " + path);
    const std::uint64_t expect = 12 + 8 * N * n;
    if (raw.size() < expect) throw std::runtime_error("ECF payload truncated: " + path);
    if (raw.size() > expect) throw std::runtime_error("ECF payload has trailing bytes: " + path);

    Cloud cloud(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(n));
    const unsigned char* p = raw.data() + 12;
    for (Eigen::Index i = 0; i < cloud.rows(); ++i)
        for (Eigen::Index j = 0; j < cloud.cols(); ++j, p += 8) {
            const double v = get_f64_le(p);
            if (!std::isfinite(v))
                throw std::runtime_error("ECF payload contains a non-finite value: " + path);
            cloud(i, j) = v;
        }
    return cloud;
}

Cloud read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool maybe_header = true;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<double> fields;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                numeric = false;
            }
            while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                ++used;
            if (used != cell.size()) numeric = false;
            fields.push_back(v);
        }
        if (!numeric) {
            if (maybe_header && rows.empty()) {  // optional header row
                maybe_header = false;
                continue;
            }
            throw std::runtime_error("non-numeric field at line " + std::to_string(lineno));
        }
        if (!rows.empty() && fields.size() != rows.front().size())
            throw std::runtime_error("ragged row at line " + std::to_string(lineno));
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) throw std::runtime_error("no data rows in " + path);

    Cloud cloud(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < cloud.rows(); ++i)
        for (Eigen::Index j = 0; j < cloud.cols(); ++j)
            cloud(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    check_cloud(cloud);
    return cloud;
}

void write_csv(const std::string& path, const Cloud& cloud) {
    check_cloud(cloud);
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    char buf[40];
    for (Eigen::Index i = 0; i < cloud.rows(); ++i) {
        for (Eigen::Index j = 0; j < cloud.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", cloud(i, j));
            os << buf << (j + 1 == cloud.cols() ? '\n' : ',');
        }
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace embfp
