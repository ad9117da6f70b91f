#include <stdio.h>
#include <string.h>

#include "singbraid.h"

static int check(SbStatus st, const char *what) {
    if (st != SB_STATUS_OK) {
        fprintf(stderr, "%s: status %d: %s\n", what, (int)st, sb_last_error_message());
        return 1;
    }
    return 0;
}

int main(void) {
    SbBraidWord *w = NULL;
    bool trivial = false;
    if (check(sb_braid_parse("s1 t1 s1^-1 t1^-1", 3, &w), "parse")) return 1;
    if (check(sb_braid_is_trivial(w, &trivial), "trivial")) return 1;
    sb_braid_free(w);
    if (!trivial) return 2;

    SbSpWord *x = NULL;
    SbSpWord *y = NULL;
    char *text = NULL;
    if (check(sb_sp_parse("b23", &x), "sp parse")) return 1;
    if (check(sb_sp_conjugate(x, "t1", &y), "conjugate")) return 1;
    if (check(sb_sp_to_string(y, &text), "to_string")) return 1;
    int same = strcmp(text, "b12^-1 a12 b13 a12^-1 b12") == 0;
    sb_string_free(text);
    sb_sp_free(x);
    sb_sp_free(y);
    if (!same) return 3;

    if (sb_braid_parse("s1 q", 3, &w) != SB_STATUS_SYNTAX) return 4;
    printf("ok\n");
    return 0;
}
