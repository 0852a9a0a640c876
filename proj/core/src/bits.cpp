#include "congest/bits.hpp"

namespace congest {

void BitString::append_uint(std::uint64_t value, int width) {
    if (width < 0 || width > 64) throw Error("bit width out of range");
    if (width < 64 && (value >> width) != 0) {
        throw Error("value does not fit in " + std::to_string(width) + " bits");
    }
    for (int i = width - 1; i >= 0; --i) push_back((value >> i) & 1u);
}

std::uint64_t BitReader::read_uint(int width) {
    if (width < 0 || width > 64) throw Error("bit width out of range");
    if (pos_ + static_cast<std::size_t>(width) > s_->size_bits()) {
        throw Error("bit read past end of message");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (s_->bit(pos_++) ? 1u : 0u);
    return v;
}

void BitReader::skip(std::size_t bits) {
    if (pos_ + bits > s_->size_bits()) throw Error("bit skip past end of message");
    pos_ += bits;
}

void BitReader::seek(std::size_t pos) {
    if (pos > s_->size_bits()) throw Error("bit seek past end of message");
    pos_ = pos;
}

}  // namespace congest
