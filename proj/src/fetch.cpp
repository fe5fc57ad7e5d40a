#include "f3had/fetch.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "f3had/sha256.hpp"

namespace f3had {

namespace fs = std::filesystem;

std::string default_matrix_url() {
    if (const char* env = std::getenv("F3HAD_MATRIX_URL"); env && *env) return env;
    return "https://www.math.is.tohoku.ac.jp/~mharada/F3-36/Hmat-F.txt";
}

namespace {

std::string sha_hex(const std::string& data) {
    Sha256 sha;
    sha.update(data.data(), data.size());
    return hex_digest(sha.digest());
}

std::string cache_file_for(const std::string& url) {
    return "matrices-" + sha_hex(url).substr(0, 12) + ".txt";
}

std::string http_get(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw std::runtime_error("bad url: " + url);
    const std::string scheme = url.substr(0, scheme_end);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string host = url.substr(scheme_end + 3,
                                        (path_start == std::string::npos ? url.size() : path_start) -
                                            scheme_end - 3);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Result res = [&] {
        if (scheme == "https") {
            httplib::SSLClient cli(host);
            cli.set_follow_location(true);
            return cli.Get(path);
        }
        httplib::Client cli(host);
        cli.set_follow_location(true);
        return cli.Get(path);
    }();
    if (!res)
        throw std::runtime_error("fetch failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("fetch failed for " + url + ": HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace

FetchResult fetch_published_matrices(const FetchOptions& opt) {
    FetchResult out;
    const std::string url = opt.url.empty() ? default_matrix_url() : opt.url;
    fs::create_directories(opt.cache_dir);
    const fs::path cached = fs::path(opt.cache_dir) / cache_file_for(url);
    out.cache_path = cached.string();

    std::string body;
    if (!opt.refresh && fs::exists(cached)) {
        std::ifstream in(cached, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
        out.from_cache = true;
    } else {
        body = http_get(url);
        std::ofstream f(cached, std::ios::binary);
        f << body;
        std::ofstream meta(cached.string() + ".sha256");
        meta << sha_hex(body) << "  " << cached.filename().string() << "\n";
    }
    out.sha256 = sha_hex(body);

    HadamardParseReport rep = parse_hadamard_text(body);
    out.matrices = std::move(rep.matrices);
    out.errors = std::move(rep.errors);
    return out;
}

}  // namespace f3had
