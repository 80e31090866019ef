#include "llgraph.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cycles.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "local_linear.hpp"
#include "reconstruct.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "star.hpp"

namespace {

thread_local std::string g_last_error;

llg_status status_of(llg::errc c) {
    switch (c) {
        case llg::errc::invalid_argument: return LLG_ERR_INVALID_ARGUMENT;
        case llg::errc::parse_error: return LLG_ERR_PARSE;
        case llg::errc::endpoint_out_of_range: return LLG_ERR_ENDPOINT_OUT_OF_RANGE;
        case llg::errc::self_loop: return LLG_ERR_SELF_LOOP;
        case llg::errc::not_locally_linear: return LLG_ERR_NOT_LOCALLY_LINEAR;
        case llg::errc::too_small: return LLG_ERR_TOO_SMALL;
        case llg::errc::unsupported_length: return LLG_ERR_UNSUPPORTED_LENGTH;
        case llg::errc::invalid_star: return LLG_ERR_INVALID_STAR;
        case llg::errc::not_cluster_neighborhood: return LLG_ERR_NOT_CLUSTER_NEIGHBORHOOD;
        case llg::errc::too_many_parts: return LLG_ERR_TOO_MANY_PARTS;
        case llg::errc::gluing_contradiction: return LLG_ERR_GLUING_CONTRADICTION;
        case llg::errc::bijection_failure: return LLG_ERR_BIJECTION_FAILURE;
        case llg::errc::invalid_param: return LLG_ERR_INVALID_PARAM;
        case llg::errc::retry_exhausted: return LLG_ERR_RETRY_EXHAUSTED;
        case llg::errc::search_exhausted: return LLG_ERR_SEARCH_EXHAUSTED;
        case llg::errc::odd_degree: return LLG_ERR_ODD_DEGREE;
        case llg::errc::io_error: return LLG_ERR_IO;
        case llg::errc::internal: return LLG_ERR_INTERNAL;
    }
    return LLG_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

const llg::Graph* unwrap(const llg_graph* g) { return reinterpret_cast<const llg::Graph*>(g); }

llg_graph* wrap(llg::Graph g) { return reinterpret_cast<llg_graph*>(new llg::Graph(std::move(g))); }

template <typename Fn>
llg_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return LLG_OK;
    } catch (const llg::Error& e) {
        g_last_error = e.detail();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LLG_ERR_INTERNAL;
    }
}

llg_status require(bool cond, const char* what) {
    if (cond) return LLG_OK;
    g_last_error = what;
    return LLG_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* llg_status_name(llg_status s) {
    switch (s) {
        case LLG_OK: return "Ok";
        case LLG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case LLG_ERR_PARSE: return "ParseError";
        case LLG_ERR_ENDPOINT_OUT_OF_RANGE: return "EndpointOutOfRange";
        case LLG_ERR_SELF_LOOP: return "SelfLoop";
        case LLG_ERR_NOT_LOCALLY_LINEAR: return "NotLocallyLinear";
        case LLG_ERR_TOO_SMALL: return "TooSmall";
        case LLG_ERR_UNSUPPORTED_LENGTH: return "UnsupportedLength";
        case LLG_ERR_INVALID_STAR: return "InvalidStar";
        case LLG_ERR_NOT_CLUSTER_NEIGHBORHOOD: return "NotClusterNeighborhood";
        case LLG_ERR_TOO_MANY_PARTS: return "TooManyParts";
        case LLG_ERR_GLUING_CONTRADICTION: return "GluingContradiction";
        case LLG_ERR_BIJECTION_FAILURE: return "BijectionFailure";
        case LLG_ERR_INVALID_PARAM: return "InvalidParam";
        case LLG_ERR_RETRY_EXHAUSTED: return "RetryExhausted";
        case LLG_ERR_SEARCH_EXHAUSTED: return "SearchExhausted";
        case LLG_ERR_ODD_DEGREE: return "OddDegree";
        case LLG_ERR_IO: return "IoError";
        case LLG_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownError";
}

const char* llg_last_error(void) { return g_last_error.c_str(); }

void llg_string_free(char* s) { std::free(s); }

void llg_index_free(uint32_t* p) { std::free(p); }

llg_status llg_graph_create(uint32_t n, const uint32_t* edges, size_t edge_count,
                            llg_graph** out) {
    if (auto st = require(out && (edges || edge_count == 0), "null pointer argument")) return st;
    return guarded([&] {
        llg::EdgeList list;
        list.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = wrap(llg::Graph(n, list));
    });
}

llg_status llg_graph_parse(const char* text, llg_graph** out) {
    if (auto st = require(text && out, "null pointer argument")) return st;
    return guarded([&] { *out = wrap(llg::parse_edge_list(text)); });
}

llg_status llg_graph_load(const char* path, llg_graph** out) {
    if (auto st = require(path && out, "null pointer argument")) return st;
    return guarded([&] { *out = wrap(llg::load_edge_list(path)); });
}

void llg_graph_free(llg_graph* g) { delete reinterpret_cast<llg::Graph*>(g); }

uint32_t llg_graph_vertex_count(const llg_graph* g) { return g ? unwrap(g)->vertex_count() : 0; }

size_t llg_graph_edge_count(const llg_graph* g) { return g ? unwrap(g)->edge_count() : 0; }

llg_status llg_graph_format(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::format_edge_list(*unwrap(g))); });
}

llg_status llg_graph_format_dot(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::format_dot(*unwrap(g))); });
}

llg_status llg_generate(const char* family, uint32_t t, double merge_bias, uint64_t seed,
                        llg_graph** out) {
    if (auto st = require(family && out, "null pointer argument")) return st;
    return guarded([&] {
        std::string f = family;
        if (f == "paley9")
            *out = wrap(llg::paley9());
        else if (f == "snake")
            *out = wrap(llg::triangular_snake(t));
        else if (f == "friendship")
            *out = wrap(llg::friendship(t));
        else if (f == "random_cactus")
            *out = wrap(llg::random_triangular_cactus(t, seed));
        else if (f == "random_locally_linear")
            *out = wrap(llg::random_locally_linear(t, merge_bias, seed));
        else
            llg::fail(llg::errc::invalid_param, "unknown family '" + f + "'");
    });
}

llg_status llg_check_locally_linear(const llg_graph* g, int* is_locally_linear, char** witness) {
    if (auto st = require(g && is_locally_linear, "null pointer argument")) return st;
    return guarded([&] {
        llg::LinearityVerdict v = llg::check_locally_linear(*unwrap(g));
        *is_locally_linear = v.is_locally_linear ? 1 : 0;
        if (witness) *witness = v.witness ? dup_string(v.witness->describe()) : nullptr;
    });
}

llg_status llg_star(const llg_graph* g, llg_graph** star, uint32_t** triangles,
                    size_t* triangle_count) {
    if (auto st = require(g && star, "null pointer argument")) return st;
    return guarded([&] {
        llg::StarResult sr = llg::star_graph(*unwrap(g));
        if (triangle_count) *triangle_count = sr.triangles.size();
        if (triangles) {
            auto* buf =
                static_cast<uint32_t*>(std::malloc(sizeof(uint32_t) * 3 * sr.triangles.size()));
            for (size_t i = 0; i < sr.triangles.size(); ++i)
                for (size_t k = 0; k < 3; ++k) buf[3 * i + k] = sr.triangles[i].v[k];
            *triangles = buf;
        }
        *star = wrap(std::move(sr.star));
    });
}

llg_status llg_is_valid_star(const llg_graph* h, int* valid, char** violation) {
    if (auto st = require(h && valid, "null pointer argument")) return st;
    return guarded([&] {
        llg::StarValidity v = llg::is_valid_star(*unwrap(h));
        *valid = v.valid ? 1 : 0;
        if (violation) *violation = v.valid ? nullptr : dup_string(v.violation());
    });
}

llg_status llg_reconstruct(const llg_graph* h, llg_graph** base) {
    if (auto st = require(h && base, "null pointer argument")) return st;
    return guarded([&] { *base = wrap(llg::reconstruct_base(*unwrap(h)).base); });
}

llg_status llg_theorem_holds(const llg_graph* g, int* holds) {
    if (auto st = require(g && holds, "null pointer argument")) return st;
    return guarded([&] { *holds = llg::verify_theorem1(*unwrap(g)).holds ? 1 : 0; });
}

llg_status llg_isomorphic(const llg_graph* a, const llg_graph* b, int* isomorphic,
                          uint32_t** mapping, size_t* mapping_len) {
    if (auto st = require(a && b && isomorphic, "null pointer argument")) return st;
    return guarded([&] {
        auto cert = llg::are_isomorphic(*unwrap(a), *unwrap(b));
        *isomorphic = cert ? 1 : 0;
        if (mapping_len) *mapping_len = cert ? cert->mapping.size() : 0;
        if (mapping) {
            *mapping = nullptr;
            if (cert) {
                auto* buf =
                    static_cast<uint32_t*>(std::malloc(sizeof(uint32_t) * cert->mapping.size()));
                for (size_t i = 0; i < cert->mapping.size(); ++i) buf[i] = cert->mapping[i];
                *mapping = buf;
            }
        }
    });
}

llg_status llg_report_verify(const llg_graph* g, int* ok, char** text) {
    if (auto st = require(g && ok && text, "null pointer argument")) return st;
    return guarded([&] {
        llg::TextReport r = llg::report_verify(*unwrap(g));
        *ok = r.ok ? 1 : 0;
        *text = dup_string(r.text);
    });
}

llg_status llg_report_star(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::report_star(*unwrap(g))); });
}

llg_status llg_report_charpoly(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::report_charpoly(*unwrap(g))); });
}

llg_status llg_report_theorem(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::report_theorem(*unwrap(g))); });
}

llg_status llg_report_census(const llg_graph* g, char** text) {
    if (auto st = require(g && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::report_census(*unwrap(g))); });
}

llg_status llg_report_reconstruct(const llg_graph* h, char** text) {
    if (auto st = require(h && text, "null pointer argument")) return st;
    return guarded([&] { *text = dup_string(llg::report_reconstruct(*unwrap(h))); });
}

llg_status llg_report_roundtrip(const llg_graph* g, int* ok, char** text) {
    if (auto st = require(g && ok && text, "null pointer argument")) return st;
    return guarded([&] {
        llg::TextReport r = llg::report_roundtrip(*unwrap(g));
        *ok = r.ok ? 1 : 0;
        *text = dup_string(r.text);
    });
}

llg_status llg_hexagon_fixtures(const char* base_path, const char* star_path,
                                char** base_edge_text, char** star_edge_text, char** report) {
    if (auto st = require(base_path && star_path && base_edge_text && star_edge_text && report,
                          "null pointer argument"))
        return st;
    return guarded([&] {
        auto [base_side, star_side] = llg::find_hexagon_counterexamples();
        *base_edge_text = dup_string(llg::format_edge_list(base_side.graph));
        *star_edge_text = dup_string(llg::format_edge_list(star_side.graph));
        *report = dup_string(llg::report_hex_counterexample(base_side, base_path) +
                             llg::report_hex_counterexample(star_side, star_path));
    });
}

}  // extern "C"
