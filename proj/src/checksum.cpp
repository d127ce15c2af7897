#include "clusterbench/checksum.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace clusterbench {

namespace {

struct DigestContext {
    EVP_MD_CTX* ctx;
    DigestContext() : ctx(EVP_MD_CTX_new()) {
        if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256: failed to initialize digest");
    }
    ~DigestContext() { EVP_MD_CTX_free(ctx); }
    DigestContext(const DigestContext&) = delete;
    DigestContext& operator=(const DigestContext&) = delete;

    void update(const void* data, std::size_t size) {
        if (EVP_DigestUpdate(ctx, data, size) != 1) throw std::runtime_error("sha256: digest update failed");
    }

    std::string finish() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx, digest.data(), &len) != 1)
            throw std::runtime_error("sha256: digest finalization failed");
        static const char* hex = "0123456789abcdef";
        std::string out;
        out.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(hex[digest[i] >> 4]);
            out.push_back(hex[digest[i] & 0x0f]);
        }
        return out;
    }
};

}  // namespace

std::string sha256_hex(std::span<const unsigned char> bytes) {
    DigestContext ctx;
    ctx.update(bytes.data(), bytes.size());
    return ctx.finish();
}

std::string sha256_hex(const std::string& bytes) {
    DigestContext ctx;
    ctx.update(bytes.data(), bytes.size());
    return ctx.finish();
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("sha256: cannot open " + path.string());
    DigestContext ctx;
    std::array<char, 65536> buffer;
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        ctx.update(buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
    if (in.bad()) throw std::runtime_error("sha256: read error on " + path.string());
    return ctx.finish();
}

}  // namespace clusterbench
