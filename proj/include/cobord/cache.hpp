#ifndef COBORD_CACHE_HPP
#define COBORD_CACHE_HPP

#include <string>

#include "cobord/fgl.hpp"

namespace cobord {

// On-disk coefficient cache, format:
//   cobordism-cache v1 N=<int> window=<int>
//   a <i> <j> = <poly>     (interior entries i,j >= 1, sorted by (i,j))
//   c <i> <j> = <poly>     (all certified entries, sorted by (i,j))
// Rendering is canonical, so re-serialization is byte-identical. Loading
// validates indices, parseability and homogeneity, and re-checks the
// structural c-table invariants; records absent from the file load as zero.
void cache_save(const FglContext &ctx, const std::string &path);

// Throws CacheError on malformed input.
FglContext cache_load(const std::string &path);

std::string cache_serialize(const FglContext &ctx);

} // namespace cobord

#endif
