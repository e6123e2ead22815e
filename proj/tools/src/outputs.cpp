#include "outputs.hpp"

#include <fstream>
#include <system_error>

#include "patmat/errors.hpp"

namespace patmat::cli {

OutputWriter::OutputWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        throw config_error("cannot create output directory '" + dir_.string() +
                           "': " + ec.message());
    }
}

OutputWriter::~OutputWriter() {
    if (finalized_) {
        return;
    }
    for (const auto& path : written_) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
}

void OutputWriter::write_text(const std::string& name, const std::string& content) {
    std::filesystem::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw config_error("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw config_error("write to '" + path.string() + "' failed");
    }
    written_.push_back(path);
}

}  // namespace patmat::cli
