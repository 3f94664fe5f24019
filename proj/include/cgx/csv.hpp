#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cgx {

inline constexpr const char* kVersion = "0.1.0";

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// All emitted tables carry one comment line with the version, the seed and a
// digest of the full configuration, so a row set can always be traced back to
// the exact invocation that produced it.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::string& config, std::uint64_t seed)
        : out_(out) {
        char digest[17];
        std::snprintf(digest, sizeof digest, "%016llx",
                      static_cast<unsigned long long>(fnv1a(config)));
        out_ << "# cgx " << kVersion << " seed=" << seed << " config=" << digest
             << "\n";
    }

    void header(const std::vector<std::string>& cols) { row(cols); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

private:
    std::ostream& out_;
};

}  // namespace cgx
