// Download-and-cache for published Hadamard matrix files.  A fetched file
// is stored in the cache directory with its SHA-256 recorded next to it;
// later runs parse the cached copy without touching the network.

#pragma once

#include <string>
#include <vector>

#include "f3had/hadamard.hpp"

namespace f3had {

std::string default_matrix_url();  // honours the F3HAD_MATRIX_URL override

struct FetchOptions {
    std::string url;                 // empty = default_matrix_url()
    std::string cache_dir = ".f3had";
    bool refresh = false;            // ignore the cache and re-download
};

struct FetchResult {
    std::vector<HadamardMatrix> matrices;
    std::vector<std::string> errors;  // per-block parse diagnostics
    std::string cache_path;
    std::string sha256;
    bool from_cache = false;
};

FetchResult fetch_published_matrices(const FetchOptions& opt = {});

}  // namespace f3had
