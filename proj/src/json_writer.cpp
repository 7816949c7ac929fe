#include "ssl/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ssl {

Json& Json::set(const std::string& key, Json value) {
    if (kind_ != Kind::Object) throw std::logic_error("Json::set on non-object");
    fields_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::Array) throw std::logic_error("Json::push on non-array");
    items_.push_back(std::move(value));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::logic_error("Json: non-finite number");
    if (v == 0.0) v = 0.0;  // collapse -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<size_t>(indent) * depth, ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Int: out += std::to_string(int_); break;
        case Kind::Double: out += format_double(double_); break;
        case Kind::String: write_escaped(out, string_); break;
        case Kind::Array: {
            if (items_.empty()) { out += "[]"; break; }
            out += '[';
            for (size_t i = 0; i < items_.size(); ++i) {
                if (i) out += ',';
                newline_indent(out, indent, depth + 1);
                items_[i].write(out, indent, depth + 1);
            }
            newline_indent(out, indent, depth);
            out += ']';
            break;
        }
        case Kind::Object: {
            if (fields_.empty()) { out += "{}"; break; }
            out += '{';
            for (size_t i = 0; i < fields_.size(); ++i) {
                if (i) out += ',';
                newline_indent(out, indent, depth + 1);
                write_escaped(out, fields_[i].first);
                out += indent < 0 ? ":" : ": ";
                fields_[i].second.write(out, indent, depth + 1);
            }
            newline_indent(out, indent, depth);
            out += '}';
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

}  // namespace ssl
