#include <stdio.h>
#include "hfmap.h"

#define CHECK(call)                                                      \
    do {                                                                 \
        HfmapStatus s_ = (call);                                         \
        if (s_ != HFMAP_STATUS_OK) {                                     \
            fprintf(stderr, "%s: %d %s\n", #call, s_, hfmap_last_error()); \
            return 1;                                                    \
        }                                                                \
    } while (0)

int main(void) {
    uint64_t idx = 0;
    CHECK(hfmap_parson_index(4, 5, &idx));
    printf("index %llu\n", (unsigned long long)idx);

    HfmapMap *m = NULL;
    HfmapInvariants inv;
    CHECK(hfmap_map_new(4, 5, 0, &m));
    CHECK(hfmap_map_invariants(m, &inv));
    printf("V %zu E %zu F %zu genus %lld\n", inv.vertices, inv.edges, inv.faces, (long long)inv.genus);
    hfmap_map_free(m);

    if (hfmap_map_new(4, 6, 10, &m) != HFMAP_STATUS_GROUP_TOO_LARGE) {
        fprintf(stderr, "expected group bound error\n");
        return 1;
    }
    printf("bound: %s\n", hfmap_last_error());

    char *dot = NULL;
    CHECK(hfmap_render_quotient(4, 5, HFMAP_FORMAT_DOT, &dot));
    printf("%.12s\n", dot);
    hfmap_string_free(dot);
    return 0;
}
