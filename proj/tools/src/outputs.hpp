#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace patmat::cli {

// Collects the files of one run and removes them again if the run dies before
// finalize(), so failed runs leave no partial outputs behind.
class OutputWriter {
  public:
    explicit OutputWriter(std::filesystem::path dir);
    ~OutputWriter();

    OutputWriter(const OutputWriter&) = delete;
    OutputWriter& operator=(const OutputWriter&) = delete;

    const std::filesystem::path& dir() const { return dir_; }
    void write_text(const std::string& name, const std::string& content);
    void finalize() { finalized_ = true; }

  private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> written_;
    bool finalized_ = false;
};

}  // namespace patmat::cli
