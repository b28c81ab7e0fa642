#include <assert.h>
#include <stdio.h>
#include "rookery.h"

int main(void) {
    RkComplex *board = NULL;
    assert(rk_complex_chessboard(4, 3, &board) == RK_STATUS_OK);
    assert(rk_complex_ground_size(board) == 12);

    uint64_t betti[8];
    size_t written = 0;
    bool torsion_free = false;
    assert(rk_betti(board, betti, 8, &written, &torsion_free) == RK_STATUS_OK);
    assert(written == 3 && betti[0] == 1 && betti[1] == 2 && betti[2] == 1);
    assert(torsion_free);

    RkComplex *points = NULL;
    assert(rk_complex_parse("m 3\n1\n2\n3\n", &points) == RK_STATUS_OK);
    RkMorse *morse = NULL;
    assert(rk_morse_bier(points, &morse) == RK_STATUS_OK);
    assert(rk_morse_is_acyclic(morse));
    assert(rk_morse_critical_count(morse) == 2);

    int64_t num, den;
    size_t element;
    assert(rk_bottleneck_solve(3, "1 2;1 3", "1,2,3", true, &num, &den, &element) == RK_STATUS_OK);
    assert(num == 2 && den == 1 && element == 2);

    rk_morse_free(morse);
    rk_complex_free(points);
    rk_complex_free(board);
    printf("c-abi smoke ok\n");
    return 0;
}
