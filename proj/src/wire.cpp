#include "skinmon/wire.hpp"

#include <cmath>
#include <stdexcept>

namespace skinmon {

namespace {

class BitWriter {
public:
    void put(std::uint32_t value, int bits) {
        for (int i = bits - 1; i >= 0; --i) push_bit((value >> i) & 1u);
    }

    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    void push_bit(std::uint32_t bit) {
        if (used_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (used_ % 8));
        ++used_;
    }

    std::vector<std::uint8_t> bytes_;
    std::size_t used_ = 0;
};

class BitReader {
public:
    explicit BitReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    std::uint32_t get(int bits) {
        std::uint32_t v = 0;
        for (int i = 0; i < bits; ++i) {
            if (pos_ / 8 >= bytes_.size())
                throw std::runtime_error("wire: truncated message");
            std::uint32_t bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
            v = (v << 1) | bit;
            ++pos_;
        }
        return v;
    }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

double patch_diag(const WireContext& ctx) {
    return std::hypot(ctx.patch_width, ctx.patch_height);
}

void put_loc(BitWriter& w, const Location& loc, const WireContext& ctx) {
    w.put(quantize(loc.x, ctx.patch_width), 16);
    w.put(quantize(loc.y, ctx.patch_height), 16);
}

Location get_loc(BitReader& r, const WireContext& ctx) {
    Location loc;
    loc.x = dequantize(static_cast<std::uint16_t>(r.get(16)), ctx.patch_width);
    loc.y = dequantize(static_cast<std::uint16_t>(r.get(16)), ctx.patch_height);
    return loc;
}

}  // namespace

std::uint16_t quantize(double value, double max_value) {
    if (max_value <= 0.0) return 0;
    double scaled = value / max_value * 65535.0;
    if (scaled <= 0.0) return 0;
    if (scaled >= 65535.0) return 65535;
    return static_cast<std::uint16_t>(std::lround(scaled));
}

double dequantize(std::uint16_t q, double max_value) {
    return static_cast<double>(q) * max_value / 65535.0;
}

std::vector<std::uint8_t> encode(const Message& msg, const WireContext& ctx) {
    BitWriter w;
    w.put(static_cast<std::uint32_t>(kind_of(msg)), 2);
    switch (kind_of(msg)) {
        case MsgKind::Status: {
            const auto& s = std::get<StatusMsg>(msg);
            w.put(s.sender & 0xffffu, 16);
            w.put(s.root_id & 0xffffu, 16);
            w.put(quantize(s.root_energy, ctx.initial_energy), 16);
            break;
        }
        case MsgKind::Location: {
            const auto& l = std::get<LocationMsg>(msg);
            w.put(l.sender & 0xffffu, 16);
            put_loc(w, l.loc, ctx);
            w.put(l.parent_id & 0xffffu, 16);
            break;
        }
        case MsgKind::Change: {
            const auto& c = std::get<ChangeMsg>(msg);
            w.put(c.sender & 0xffffu, 16);
            put_loc(w, c.root_loc, ctx);
            put_loc(w, c.boundary_loc, ctx);
            w.put(c.sign == ChangeSign::Growth ? 0b01u : 0b10u, 2);
            w.put(0, 16);  // reserved; pads the frame to its 100-bit length
            break;
        }
        case MsgKind::RelayBatch: {
            const auto& b = std::get<RelayBatchMsg>(msg);
            if (b.samples.size() > 255)
                throw std::runtime_error("wire: relay batch exceeds 255 samples");
            w.put(b.sender & 0xffffu, 16);
            w.put(static_cast<std::uint32_t>(b.samples.size()), 8);
            for (const auto& s : b.samples) {
                w.put(s.bin, 8);
                put_loc(w, s.loc, ctx);
                w.put(quantize(s.dist, patch_diag(ctx)), 16);
            }
            break;
        }
    }
    return w.take();
}

Message decode(const std::vector<std::uint8_t>& bytes, const WireContext& ctx) {
    BitReader r(bytes);
    auto kind = static_cast<MsgKind>(r.get(2));
    switch (kind) {
        case MsgKind::Status: {
            StatusMsg s;
            s.sender = r.get(16);
            s.root_id = r.get(16);
            s.root_energy =
                dequantize(static_cast<std::uint16_t>(r.get(16)), ctx.initial_energy);
            return s;
        }
        case MsgKind::Location: {
            LocationMsg l;
            l.sender = r.get(16);
            l.loc = get_loc(r, ctx);
            l.parent_id = r.get(16);
            return l;
        }
        case MsgKind::Change: {
            ChangeMsg c;
            c.sender = r.get(16);
            c.root_loc = get_loc(r, ctx);
            c.boundary_loc = get_loc(r, ctx);
            c.sign = r.get(2) == 0b01u ? ChangeSign::Growth : ChangeSign::Shrink;
            r.get(16);  // reserved
            return c;
        }
        case MsgKind::RelayBatch: {
            RelayBatchMsg b;
            b.sender = r.get(16);
            int count = static_cast<int>(r.get(8));
            b.samples.reserve(count);
            for (int i = 0; i < count; ++i) {
                RelaySample s;
                s.bin = static_cast<std::uint8_t>(r.get(8));
                s.loc = get_loc(r, ctx);
                s.dist =
                    dequantize(static_cast<std::uint16_t>(r.get(16)), patch_diag(ctx));
                b.samples.push_back(s);
            }
            return b;
        }
    }
    throw std::runtime_error("wire: bad kind tag");
}

}  // namespace skinmon
