#ifndef LATSURG_EXPORT_HPP
#define LATSURG_EXPORT_HPP

#include "latsurg/assembler.hpp"
#include "latsurg/estimator.hpp"

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latsurg {

class ExportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kAssemblyFormatVersion = 1;

struct AssemblyDocument {
    Assembly assembly;
    ResourceReport report;

    bool operator==(const AssemblyDocument&) const = default;
};

// JSON document: version, dims [w, h, steps], distance, cells (t, y, x order),
// report, plus layout, schedule and distillations so that import restores the
// Assembly exactly. Output is byte-identical for equal inputs.
void write_assembly(std::ostream& out, const Assembly& assembly, const ResourceReport& report);
std::string assembly_to_string(const Assembly& assembly, const ResourceReport& report);
void export_assembly(const Assembly& assembly, const ResourceReport& report, const std::filesystem::path& path);

// Throws ExportError naming the first offending field.
AssemblyDocument read_assembly(std::string_view text);
AssemblyDocument import_assembly(const std::filesystem::path& path);

std::string report_to_json(const ResourceReport& report);
std::string layout_to_json(const LayoutGrid& layout);
// One character per cell: Q data, + ancilla, M distillation, * distillation
// output, . unused.
std::string layout_to_ascii(const LayoutGrid& layout);

}  // namespace latsurg

#endif  // LATSURG_EXPORT_HPP
