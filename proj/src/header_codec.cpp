#include "hoct/header_codec.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <vector>

#include "hoct/errors.hpp"

namespace hoct {
namespace {

void check_count(std::size_t count) {
    if (count > 255) {
        throw FormatError(FormatError::Kind::child_count_overflow,
                          "tree node has " + std::to_string(count) +
                              " children; the header field holds at most 255");
    }
}

// Appends count + per-child (beta, gamma, recursive body), left to right.
// Iterative so pathological nesting cannot exhaust the call stack.
void emit_body(Bytes& out, const std::vector<TransformNode>& top) {
    check_count(top.size());
    out.push_back(static_cast<std::uint8_t>(top.size()));

    struct Level {
        const std::vector<TransformNode>* kids;
        std::size_t next;
    };
    std::vector<Level> stack;
    stack.push_back({&top, 0});
    while (!stack.empty()) {
        Level& lv = stack.back();
        if (lv.next == lv.kids->size()) {
            stack.pop_back();
            continue;
        }
        const TransformNode& c = (*lv.kids)[lv.next++];
        out.push_back(c.beta);
        out.push_back(c.gamma);
        check_count(c.children.size());
        out.push_back(static_cast<std::uint8_t>(c.children.size()));
        stack.push_back({&c.children, 0});
    }
}

}  // namespace

Bytes serialize_tree(const CtTree& t) {
    check_count(t.contexts.size());
    Bytes out;
    out.push_back(static_cast<std::uint8_t>(t.contexts.size()));
    for (const ContextNode& c : t.contexts) {
        out.push_back(c.symbol);
        emit_body(out, c.children);
    }
    return out;
}

CtTree deserialize_tree(const std::uint8_t* data, std::size_t size,
                        std::size_t* consumed) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (k > size - pos) {
            throw FormatError(FormatError::Kind::truncated_header,
                              "tree header ends mid-node at byte " + std::to_string(pos));
        }
    };

    need(1);
    const unsigned context_count = data[pos++];

    CtTree t;
    t.contexts.reserve(context_count);

    struct Level {
        std::vector<TransformNode>* kids;
        unsigned remaining;
    };
    std::vector<Level> stack;

    for (unsigned i = 0; i < context_count; ++i) {
        need(2);
        const std::uint8_t sym = data[pos++];
        t.contexts.push_back(ContextNode{sym, {}});
        stack.clear();
        stack.push_back({&t.contexts.back().children, static_cast<unsigned>(data[pos++])});

        while (!stack.empty()) {
            Level& lv = stack.back();
            if (lv.remaining == 0) {
                stack.pop_back();
                continue;
            }
            --lv.remaining;
            need(3);
            const std::uint8_t beta = data[pos++];
            const std::uint8_t gamma = data[pos++];
            const unsigned count = data[pos++];
            lv.kids->push_back(TransformNode{beta, gamma, {}});
            // Only the top level's vector ever grows, so the parent pointers
            // below stay valid.
            stack.push_back({&lv.kids->back().children, count});
        }
    }

    if (consumed) *consumed = pos;
    return t;
}

CtTree deserialize_tree(const Bytes& b, std::size_t* consumed) {
    return deserialize_tree(b.data(), b.size(), consumed);
}

void write_container(std::ostream& out, const Container& c) {
    if (c.tree_bytes.size() > 0xFFFFFFFFull) {
        throw Error("tree header exceeds the 4 GiB container field");
    }
    out.write(kMagic, 4);
    out.put(static_cast<char>(kFormatVersion));
    const std::uint32_t len = static_cast<std::uint32_t>(c.tree_bytes.size());
    const char len_le[4] = {
        static_cast<char>(len & 0xFF),
        static_cast<char>((len >> 8) & 0xFF),
        static_cast<char>((len >> 16) & 0xFF),
        static_cast<char>((len >> 24) & 0xFF),
    };
    out.write(len_le, 4);
    if (!c.tree_bytes.empty()) {
        out.write(reinterpret_cast<const char*>(c.tree_bytes.data()),
                  static_cast<std::streamsize>(c.tree_bytes.size()));
    }
    if (!c.payload.empty()) {
        out.write(reinterpret_cast<const char*>(c.payload.data()),
                  static_cast<std::streamsize>(c.payload.size()));
    }
    if (!out) throw IoError("container write failed");
}

Container read_container(std::istream& in) {
    auto read_exact = [&](void* dst, std::size_t k, const char* what) {
        in.read(static_cast<char*>(dst), static_cast<std::streamsize>(k));
        if (static_cast<std::size_t>(in.gcount()) != k) {
            throw FormatError(FormatError::Kind::truncated_file,
                              std::string("container ends inside the ") + what);
        }
    };

    char magic[4];
    read_exact(magic, 4, "magic");
    if (std::memcmp(magic, kMagic, 4) != 0) {
        throw FormatError(FormatError::Kind::bad_magic, "not a HOCT container");
    }

    std::uint8_t version = 0;
    read_exact(&version, 1, "version");
    if (version != kFormatVersion) {
        throw FormatError(FormatError::Kind::unsupported_version,
                          "unsupported container version " + std::to_string(version));
    }

    std::uint8_t len_le[4];
    read_exact(len_le, 4, "tree length");
    const std::uint32_t len = static_cast<std::uint32_t>(len_le[0]) |
                              (static_cast<std::uint32_t>(len_le[1]) << 8) |
                              (static_cast<std::uint32_t>(len_le[2]) << 16) |
                              (static_cast<std::uint32_t>(len_le[3]) << 24);

    Container c;
    c.tree_bytes.resize(len);
    if (len > 0) read_exact(c.tree_bytes.data(), len, "tree header");

    char buf[65536];
    for (;;) {
        in.read(buf, sizeof buf);
        const std::streamsize got = in.gcount();
        if (got > 0) {
            c.payload.insert(c.payload.end(), buf, buf + got);
        }
        if (got < static_cast<std::streamsize>(sizeof buf)) break;
    }
    if (in.bad()) throw IoError("container read failed");
    return c;
}

}  // namespace hoct
