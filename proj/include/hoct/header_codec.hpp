#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "hoct/core.hpp"
#include "hoct/errors.hpp"
#include "hoct/tree.hpp"

namespace hoct {

// Tree header grammar, all fields one byte:
//   tree       := count:u8 (symbol:u8 node){count}        -- root children
//   node       := count:u8 (beta:u8 gamma:u8 node){count} -- transform nodes
// Serialized size is exactly 1 + 2*contexts + 3*transforms bytes.
Bytes serialize_tree(const CtTree& t);

// Parses one tree from the front of the buffer. Bytes past the tree are
// ignored (the container delimits the region); running out of bytes mid-node
// raises FormatError::truncated_header. Never recursive, so arbitrarily
// nested input cannot blow the stack.
CtTree deserialize_tree(const std::uint8_t* data, std::size_t size,
                        std::size_t* consumed = nullptr);
CtTree deserialize_tree(const Bytes& b, std::size_t* consumed = nullptr);

// .hoct container: magic, version, 4-byte little-endian tree length, tree
// bytes, then the transformed payload till end of stream. The payload has
// exactly the length of the original message.
inline constexpr char kMagic[4] = {'H', 'O', 'C', 'T'};
inline constexpr std::uint8_t kFormatVersion = 0x01;

struct Container {
    Bytes tree_bytes;
    Bytes payload;
};

void write_container(std::ostream& out, const Container& c);
Container read_container(std::istream& in);

}  // namespace hoct
