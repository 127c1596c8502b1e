#include "report.hpp"

namespace seshadri::cli {

void Report::write(std::ostream& out, Format format) const
{
    if (format == Format::Json) {
        nlohmann::json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["results"] = results;
        doc["provenance"] = provenance;
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& line : tsv) {
        out << line << '\n';
    }
}

} // namespace seshadri::cli
