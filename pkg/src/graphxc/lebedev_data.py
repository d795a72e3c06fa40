# Lebedev quadrature rules under octahedral symmetry, generated by
# tools/gen_lebedev.py (moment-equation solve, weights sum to 1).
# Keys are point counts; values are (degree, points, weights).

import numpy as np

LEBEDEV_RULES = {
    6: (3, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
    ]), np.array([
        np.float64(0.16666666666666669),
        np.float64(0.16666666666666669),
        np.float64(0.16666666666666669),
        np.float64(0.16666666666666669),
        np.float64(0.16666666666666669),
        np.float64(0.16666666666666669),
    ])),
    14: (5, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
    ]), np.array([
        np.float64(0.0666666666666667),
        np.float64(0.0666666666666667),
        np.float64(0.0666666666666667),
        np.float64(0.0666666666666667),
        np.float64(0.0666666666666667),
        np.float64(0.0666666666666667),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
        np.float64(0.07500000000000001),
    ])),
    26: (7, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
    ]), np.array([
        np.float64(0.04761904761904774),
        np.float64(0.04761904761904774),
        np.float64(0.04761904761904774),
        np.float64(0.04761904761904774),
        np.float64(0.04761904761904774),
        np.float64(0.04761904761904774),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03809523809523817),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
        np.float64(0.03214285714285719),
    ])),
    38: (9, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.0), np.float64(0.45970084338098305), np.float64(0.8880738339771153)],
        [np.float64(0.0), np.float64(0.45970084338098305), np.float64(-0.8880738339771153)],
        [np.float64(0.0), np.float64(-0.45970084338098305), np.float64(0.8880738339771153)],
        [np.float64(0.0), np.float64(-0.45970084338098305), np.float64(-0.8880738339771153)],
        [np.float64(0.45970084338098305), np.float64(0.0), np.float64(0.8880738339771153)],
        [np.float64(0.45970084338098305), np.float64(0.0), np.float64(-0.8880738339771153)],
        [np.float64(-0.45970084338098305), np.float64(0.0), np.float64(0.8880738339771153)],
        [np.float64(-0.45970084338098305), np.float64(0.0), np.float64(-0.8880738339771153)],
        [np.float64(0.45970084338098305), np.float64(0.8880738339771153), np.float64(0.0)],
        [np.float64(0.45970084338098305), np.float64(-0.8880738339771153), np.float64(0.0)],
        [np.float64(-0.45970084338098305), np.float64(0.8880738339771153), np.float64(0.0)],
        [np.float64(-0.45970084338098305), np.float64(-0.8880738339771153), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.8880738339771153), np.float64(0.45970084338098305)],
        [np.float64(0.0), np.float64(0.8880738339771153), np.float64(-0.45970084338098305)],
        [np.float64(0.0), np.float64(-0.8880738339771153), np.float64(0.45970084338098305)],
        [np.float64(0.0), np.float64(-0.8880738339771153), np.float64(-0.45970084338098305)],
        [np.float64(0.8880738339771153), np.float64(0.0), np.float64(0.45970084338098305)],
        [np.float64(0.8880738339771153), np.float64(0.0), np.float64(-0.45970084338098305)],
        [np.float64(-0.8880738339771153), np.float64(0.0), np.float64(0.45970084338098305)],
        [np.float64(-0.8880738339771153), np.float64(0.0), np.float64(-0.45970084338098305)],
        [np.float64(0.8880738339771153), np.float64(0.45970084338098305), np.float64(0.0)],
        [np.float64(0.8880738339771153), np.float64(-0.45970084338098305), np.float64(0.0)],
        [np.float64(-0.8880738339771153), np.float64(0.45970084338098305), np.float64(0.0)],
        [np.float64(-0.8880738339771153), np.float64(-0.45970084338098305), np.float64(0.0)],
    ]), np.array([
        np.float64(0.009523809523809509),
        np.float64(0.009523809523809509),
        np.float64(0.009523809523809509),
        np.float64(0.009523809523809509),
        np.float64(0.009523809523809509),
        np.float64(0.009523809523809509),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.03214285714285713),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
        np.float64(0.028571428571428567),
    ])),
    50: (11, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.9045340337332909), np.float64(0.30151134457776363), np.float64(0.30151134457776363)],
        [np.float64(-0.9045340337332909), np.float64(0.30151134457776363), np.float64(0.30151134457776363)],
        [np.float64(0.9045340337332909), np.float64(0.30151134457776363), np.float64(-0.30151134457776363)],
        [np.float64(-0.9045340337332909), np.float64(0.30151134457776363), np.float64(-0.30151134457776363)],
        [np.float64(0.9045340337332909), np.float64(-0.30151134457776363), np.float64(0.30151134457776363)],
        [np.float64(-0.9045340337332909), np.float64(-0.30151134457776363), np.float64(0.30151134457776363)],
        [np.float64(0.9045340337332909), np.float64(-0.30151134457776363), np.float64(-0.30151134457776363)],
        [np.float64(-0.9045340337332909), np.float64(-0.30151134457776363), np.float64(-0.30151134457776363)],
        [np.float64(0.30151134457776363), np.float64(0.9045340337332909), np.float64(0.30151134457776363)],
        [np.float64(0.30151134457776363), np.float64(-0.9045340337332909), np.float64(0.30151134457776363)],
        [np.float64(0.30151134457776363), np.float64(0.9045340337332909), np.float64(-0.30151134457776363)],
        [np.float64(0.30151134457776363), np.float64(-0.9045340337332909), np.float64(-0.30151134457776363)],
        [np.float64(-0.30151134457776363), np.float64(0.9045340337332909), np.float64(0.30151134457776363)],
        [np.float64(-0.30151134457776363), np.float64(-0.9045340337332909), np.float64(0.30151134457776363)],
        [np.float64(-0.30151134457776363), np.float64(0.9045340337332909), np.float64(-0.30151134457776363)],
        [np.float64(-0.30151134457776363), np.float64(-0.9045340337332909), np.float64(-0.30151134457776363)],
        [np.float64(0.30151134457776363), np.float64(0.30151134457776363), np.float64(0.9045340337332909)],
        [np.float64(0.30151134457776363), np.float64(0.30151134457776363), np.float64(-0.9045340337332909)],
        [np.float64(0.30151134457776363), np.float64(-0.30151134457776363), np.float64(0.9045340337332909)],
        [np.float64(0.30151134457776363), np.float64(-0.30151134457776363), np.float64(-0.9045340337332909)],
        [np.float64(-0.30151134457776363), np.float64(0.30151134457776363), np.float64(0.9045340337332909)],
        [np.float64(-0.30151134457776363), np.float64(0.30151134457776363), np.float64(-0.9045340337332909)],
        [np.float64(-0.30151134457776363), np.float64(-0.30151134457776363), np.float64(0.9045340337332909)],
        [np.float64(-0.30151134457776363), np.float64(-0.30151134457776363), np.float64(-0.9045340337332909)],
    ]), np.array([
        np.float64(0.012698412698412449),
        np.float64(0.012698412698412449),
        np.float64(0.012698412698412449),
        np.float64(0.012698412698412449),
        np.float64(0.012698412698412449),
        np.float64(0.012698412698412449),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02257495590828944),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.02109375000000007),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
        np.float64(0.020173335537918953),
    ])),
    74: (13, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.7337993857053428), np.float64(0.4803844614152614), np.float64(0.4803844614152614)],
        [np.float64(-0.7337993857053428), np.float64(0.4803844614152614), np.float64(0.4803844614152614)],
        [np.float64(0.7337993857053428), np.float64(0.4803844614152614), np.float64(-0.4803844614152614)],
        [np.float64(-0.7337993857053428), np.float64(0.4803844614152614), np.float64(-0.4803844614152614)],
        [np.float64(0.7337993857053428), np.float64(-0.4803844614152614), np.float64(0.4803844614152614)],
        [np.float64(-0.7337993857053428), np.float64(-0.4803844614152614), np.float64(0.4803844614152614)],
        [np.float64(0.7337993857053428), np.float64(-0.4803844614152614), np.float64(-0.4803844614152614)],
        [np.float64(-0.7337993857053428), np.float64(-0.4803844614152614), np.float64(-0.4803844614152614)],
        [np.float64(0.4803844614152614), np.float64(0.7337993857053428), np.float64(0.4803844614152614)],
        [np.float64(0.4803844614152614), np.float64(-0.7337993857053428), np.float64(0.4803844614152614)],
        [np.float64(0.4803844614152614), np.float64(0.7337993857053428), np.float64(-0.4803844614152614)],
        [np.float64(0.4803844614152614), np.float64(-0.7337993857053428), np.float64(-0.4803844614152614)],
        [np.float64(-0.4803844614152614), np.float64(0.7337993857053428), np.float64(0.4803844614152614)],
        [np.float64(-0.4803844614152614), np.float64(-0.7337993857053428), np.float64(0.4803844614152614)],
        [np.float64(-0.4803844614152614), np.float64(0.7337993857053428), np.float64(-0.4803844614152614)],
        [np.float64(-0.4803844614152614), np.float64(-0.7337993857053428), np.float64(-0.4803844614152614)],
        [np.float64(0.4803844614152614), np.float64(0.4803844614152614), np.float64(0.7337993857053428)],
        [np.float64(0.4803844614152614), np.float64(0.4803844614152614), np.float64(-0.7337993857053428)],
        [np.float64(0.4803844614152614), np.float64(-0.4803844614152614), np.float64(0.7337993857053428)],
        [np.float64(0.4803844614152614), np.float64(-0.4803844614152614), np.float64(-0.7337993857053428)],
        [np.float64(-0.4803844614152614), np.float64(0.4803844614152614), np.float64(0.7337993857053428)],
        [np.float64(-0.4803844614152614), np.float64(0.4803844614152614), np.float64(-0.7337993857053428)],
        [np.float64(-0.4803844614152614), np.float64(-0.4803844614152614), np.float64(0.7337993857053428)],
        [np.float64(-0.4803844614152614), np.float64(-0.4803844614152614), np.float64(-0.7337993857053428)],
        [np.float64(0.0), np.float64(0.3207726489807764), np.float64(0.9471562213625879)],
        [np.float64(0.0), np.float64(0.3207726489807764), np.float64(-0.9471562213625879)],
        [np.float64(0.0), np.float64(-0.3207726489807764), np.float64(0.9471562213625879)],
        [np.float64(0.0), np.float64(-0.3207726489807764), np.float64(-0.9471562213625879)],
        [np.float64(0.3207726489807764), np.float64(0.0), np.float64(0.9471562213625879)],
        [np.float64(0.3207726489807764), np.float64(0.0), np.float64(-0.9471562213625879)],
        [np.float64(-0.3207726489807764), np.float64(0.0), np.float64(0.9471562213625879)],
        [np.float64(-0.3207726489807764), np.float64(0.0), np.float64(-0.9471562213625879)],
        [np.float64(0.3207726489807764), np.float64(0.9471562213625879), np.float64(0.0)],
        [np.float64(0.3207726489807764), np.float64(-0.9471562213625879), np.float64(0.0)],
        [np.float64(-0.3207726489807764), np.float64(0.9471562213625879), np.float64(0.0)],
        [np.float64(-0.3207726489807764), np.float64(-0.9471562213625879), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.9471562213625879), np.float64(0.3207726489807764)],
        [np.float64(0.0), np.float64(0.9471562213625879), np.float64(-0.3207726489807764)],
        [np.float64(0.0), np.float64(-0.9471562213625879), np.float64(0.3207726489807764)],
        [np.float64(0.0), np.float64(-0.9471562213625879), np.float64(-0.3207726489807764)],
        [np.float64(0.9471562213625879), np.float64(0.0), np.float64(0.3207726489807764)],
        [np.float64(0.9471562213625879), np.float64(0.0), np.float64(-0.3207726489807764)],
        [np.float64(-0.9471562213625879), np.float64(0.0), np.float64(0.3207726489807764)],
        [np.float64(-0.9471562213625879), np.float64(0.0), np.float64(-0.3207726489807764)],
        [np.float64(0.9471562213625879), np.float64(0.3207726489807764), np.float64(0.0)],
        [np.float64(0.9471562213625879), np.float64(-0.3207726489807764), np.float64(0.0)],
        [np.float64(-0.9471562213625879), np.float64(0.3207726489807764), np.float64(0.0)],
        [np.float64(-0.9471562213625879), np.float64(-0.3207726489807764), np.float64(0.0)],
    ]), np.array([
        np.float64(0.0005130671797338353),
        np.float64(0.0005130671797338353),
        np.float64(0.0005130671797338353),
        np.float64(0.0005130671797338353),
        np.float64(0.0005130671797338353),
        np.float64(0.0005130671797338353),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(0.016604069565742046),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(-0.02958603896103896),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.026576207082159454),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
        np.float64(0.016522170993715696),
    ])),
    86: (15, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.8525183117012676), np.float64(0.36960284645415026), np.float64(0.36960284645415026)],
        [np.float64(-0.8525183117012676), np.float64(0.36960284645415026), np.float64(0.36960284645415026)],
        [np.float64(0.8525183117012676), np.float64(0.36960284645415026), np.float64(-0.36960284645415026)],
        [np.float64(-0.8525183117012676), np.float64(0.36960284645415026), np.float64(-0.36960284645415026)],
        [np.float64(0.8525183117012676), np.float64(-0.36960284645415026), np.float64(0.36960284645415026)],
        [np.float64(-0.8525183117012676), np.float64(-0.36960284645415026), np.float64(0.36960284645415026)],
        [np.float64(0.8525183117012676), np.float64(-0.36960284645415026), np.float64(-0.36960284645415026)],
        [np.float64(-0.8525183117012676), np.float64(-0.36960284645415026), np.float64(-0.36960284645415026)],
        [np.float64(0.36960284645415026), np.float64(0.8525183117012676), np.float64(0.36960284645415026)],
        [np.float64(0.36960284645415026), np.float64(-0.8525183117012676), np.float64(0.36960284645415026)],
        [np.float64(0.36960284645415026), np.float64(0.8525183117012676), np.float64(-0.36960284645415026)],
        [np.float64(0.36960284645415026), np.float64(-0.8525183117012676), np.float64(-0.36960284645415026)],
        [np.float64(-0.36960284645415026), np.float64(0.8525183117012676), np.float64(0.36960284645415026)],
        [np.float64(-0.36960284645415026), np.float64(-0.8525183117012676), np.float64(0.36960284645415026)],
        [np.float64(-0.36960284645415026), np.float64(0.8525183117012676), np.float64(-0.36960284645415026)],
        [np.float64(-0.36960284645415026), np.float64(-0.8525183117012676), np.float64(-0.36960284645415026)],
        [np.float64(0.36960284645415026), np.float64(0.36960284645415026), np.float64(0.8525183117012676)],
        [np.float64(0.36960284645415026), np.float64(0.36960284645415026), np.float64(-0.8525183117012676)],
        [np.float64(0.36960284645415026), np.float64(-0.36960284645415026), np.float64(0.8525183117012676)],
        [np.float64(0.36960284645415026), np.float64(-0.36960284645415026), np.float64(-0.8525183117012676)],
        [np.float64(-0.36960284645415026), np.float64(0.36960284645415026), np.float64(0.8525183117012676)],
        [np.float64(-0.36960284645415026), np.float64(0.36960284645415026), np.float64(-0.8525183117012676)],
        [np.float64(-0.36960284645415026), np.float64(-0.36960284645415026), np.float64(0.8525183117012676)],
        [np.float64(-0.36960284645415026), np.float64(-0.36960284645415026), np.float64(-0.8525183117012676)],
        [np.float64(0.18906355288539556), np.float64(0.6943540066026663), np.float64(0.6943540066026663)],
        [np.float64(-0.18906355288539556), np.float64(0.6943540066026663), np.float64(0.6943540066026663)],
        [np.float64(0.18906355288539556), np.float64(0.6943540066026663), np.float64(-0.6943540066026663)],
        [np.float64(-0.18906355288539556), np.float64(0.6943540066026663), np.float64(-0.6943540066026663)],
        [np.float64(0.18906355288539556), np.float64(-0.6943540066026663), np.float64(0.6943540066026663)],
        [np.float64(-0.18906355288539556), np.float64(-0.6943540066026663), np.float64(0.6943540066026663)],
        [np.float64(0.18906355288539556), np.float64(-0.6943540066026663), np.float64(-0.6943540066026663)],
        [np.float64(-0.18906355288539556), np.float64(-0.6943540066026663), np.float64(-0.6943540066026663)],
        [np.float64(0.6943540066026663), np.float64(0.18906355288539556), np.float64(0.6943540066026663)],
        [np.float64(0.6943540066026663), np.float64(-0.18906355288539556), np.float64(0.6943540066026663)],
        [np.float64(0.6943540066026663), np.float64(0.18906355288539556), np.float64(-0.6943540066026663)],
        [np.float64(0.6943540066026663), np.float64(-0.18906355288539556), np.float64(-0.6943540066026663)],
        [np.float64(-0.6943540066026663), np.float64(0.18906355288539556), np.float64(0.6943540066026663)],
        [np.float64(-0.6943540066026663), np.float64(-0.18906355288539556), np.float64(0.6943540066026663)],
        [np.float64(-0.6943540066026663), np.float64(0.18906355288539556), np.float64(-0.6943540066026663)],
        [np.float64(-0.6943540066026663), np.float64(-0.18906355288539556), np.float64(-0.6943540066026663)],
        [np.float64(0.6943540066026663), np.float64(0.6943540066026663), np.float64(0.18906355288539556)],
        [np.float64(0.6943540066026663), np.float64(0.6943540066026663), np.float64(-0.18906355288539556)],
        [np.float64(0.6943540066026663), np.float64(-0.6943540066026663), np.float64(0.18906355288539556)],
        [np.float64(0.6943540066026663), np.float64(-0.6943540066026663), np.float64(-0.18906355288539556)],
        [np.float64(-0.6943540066026663), np.float64(0.6943540066026663), np.float64(0.18906355288539556)],
        [np.float64(-0.6943540066026663), np.float64(0.6943540066026663), np.float64(-0.18906355288539556)],
        [np.float64(-0.6943540066026663), np.float64(-0.6943540066026663), np.float64(0.18906355288539556)],
        [np.float64(-0.6943540066026663), np.float64(-0.6943540066026663), np.float64(-0.18906355288539556)],
        [np.float64(0.0), np.float64(0.3742430390903412), np.float64(0.9273306571511725)],
        [np.float64(0.0), np.float64(0.3742430390903412), np.float64(-0.9273306571511725)],
        [np.float64(0.0), np.float64(-0.3742430390903412), np.float64(0.9273306571511725)],
        [np.float64(0.0), np.float64(-0.3742430390903412), np.float64(-0.9273306571511725)],
        [np.float64(0.3742430390903412), np.float64(0.0), np.float64(0.9273306571511725)],
        [np.float64(0.3742430390903412), np.float64(0.0), np.float64(-0.9273306571511725)],
        [np.float64(-0.3742430390903412), np.float64(0.0), np.float64(0.9273306571511725)],
        [np.float64(-0.3742430390903412), np.float64(0.0), np.float64(-0.9273306571511725)],
        [np.float64(0.3742430390903412), np.float64(0.9273306571511725), np.float64(0.0)],
        [np.float64(0.3742430390903412), np.float64(-0.9273306571511725), np.float64(0.0)],
        [np.float64(-0.3742430390903412), np.float64(0.9273306571511725), np.float64(0.0)],
        [np.float64(-0.3742430390903412), np.float64(-0.9273306571511725), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.9273306571511725), np.float64(0.3742430390903412)],
        [np.float64(0.0), np.float64(0.9273306571511725), np.float64(-0.3742430390903412)],
        [np.float64(0.0), np.float64(-0.9273306571511725), np.float64(0.3742430390903412)],
        [np.float64(0.0), np.float64(-0.9273306571511725), np.float64(-0.3742430390903412)],
        [np.float64(0.9273306571511725), np.float64(0.0), np.float64(0.3742430390903412)],
        [np.float64(0.9273306571511725), np.float64(0.0), np.float64(-0.3742430390903412)],
        [np.float64(-0.9273306571511725), np.float64(0.0), np.float64(0.3742430390903412)],
        [np.float64(-0.9273306571511725), np.float64(0.0), np.float64(-0.3742430390903412)],
        [np.float64(0.9273306571511725), np.float64(0.3742430390903412), np.float64(0.0)],
        [np.float64(0.9273306571511725), np.float64(-0.3742430390903412), np.float64(0.0)],
        [np.float64(-0.9273306571511725), np.float64(0.3742430390903412), np.float64(0.0)],
        [np.float64(-0.9273306571511725), np.float64(-0.3742430390903412), np.float64(0.0)],
    ]), np.array([
        np.float64(0.011544011544011551),
        np.float64(0.011544011544011551),
        np.float64(0.011544011544011551),
        np.float64(0.011544011544011551),
        np.float64(0.011544011544011551),
        np.float64(0.011544011544011551),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011943909085856286),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011110555710603405),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.011876501294537142),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
        np.float64(0.01181230374690448),
    ])),
    110: (17, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.9651240350865941), np.float64(0.18511563534473624), np.float64(0.18511563534473624)],
        [np.float64(-0.9651240350865941), np.float64(0.18511563534473624), np.float64(0.18511563534473624)],
        [np.float64(0.9651240350865941), np.float64(0.18511563534473624), np.float64(-0.18511563534473624)],
        [np.float64(-0.9651240350865941), np.float64(0.18511563534473624), np.float64(-0.18511563534473624)],
        [np.float64(0.9651240350865941), np.float64(-0.18511563534473624), np.float64(0.18511563534473624)],
        [np.float64(-0.9651240350865941), np.float64(-0.18511563534473624), np.float64(0.18511563534473624)],
        [np.float64(0.9651240350865941), np.float64(-0.18511563534473624), np.float64(-0.18511563534473624)],
        [np.float64(-0.9651240350865941), np.float64(-0.18511563534473624), np.float64(-0.18511563534473624)],
        [np.float64(0.18511563534473624), np.float64(0.9651240350865941), np.float64(0.18511563534473624)],
        [np.float64(0.18511563534473624), np.float64(-0.9651240350865941), np.float64(0.18511563534473624)],
        [np.float64(0.18511563534473624), np.float64(0.9651240350865941), np.float64(-0.18511563534473624)],
        [np.float64(0.18511563534473624), np.float64(-0.9651240350865941), np.float64(-0.18511563534473624)],
        [np.float64(-0.18511563534473624), np.float64(0.9651240350865941), np.float64(0.18511563534473624)],
        [np.float64(-0.18511563534473624), np.float64(-0.9651240350865941), np.float64(0.18511563534473624)],
        [np.float64(-0.18511563534473624), np.float64(0.9651240350865941), np.float64(-0.18511563534473624)],
        [np.float64(-0.18511563534473624), np.float64(-0.9651240350865941), np.float64(-0.18511563534473624)],
        [np.float64(0.18511563534473624), np.float64(0.18511563534473624), np.float64(0.9651240350865941)],
        [np.float64(0.18511563534473624), np.float64(0.18511563534473624), np.float64(-0.9651240350865941)],
        [np.float64(0.18511563534473624), np.float64(-0.18511563534473624), np.float64(0.9651240350865941)],
        [np.float64(0.18511563534473624), np.float64(-0.18511563534473624), np.float64(-0.9651240350865941)],
        [np.float64(-0.18511563534473624), np.float64(0.18511563534473624), np.float64(0.9651240350865941)],
        [np.float64(-0.18511563534473624), np.float64(0.18511563534473624), np.float64(-0.9651240350865941)],
        [np.float64(-0.18511563534473624), np.float64(-0.18511563534473624), np.float64(0.9651240350865941)],
        [np.float64(-0.18511563534473624), np.float64(-0.18511563534473624), np.float64(-0.9651240350865941)],
        [np.float64(0.21595729184584922), np.float64(0.6904210483822921), np.float64(0.6904210483822921)],
        [np.float64(-0.21595729184584922), np.float64(0.6904210483822921), np.float64(0.6904210483822921)],
        [np.float64(0.21595729184584922), np.float64(0.6904210483822921), np.float64(-0.6904210483822921)],
        [np.float64(-0.21595729184584922), np.float64(0.6904210483822921), np.float64(-0.6904210483822921)],
        [np.float64(0.21595729184584922), np.float64(-0.6904210483822921), np.float64(0.6904210483822921)],
        [np.float64(-0.21595729184584922), np.float64(-0.6904210483822921), np.float64(0.6904210483822921)],
        [np.float64(0.21595729184584922), np.float64(-0.6904210483822921), np.float64(-0.6904210483822921)],
        [np.float64(-0.21595729184584922), np.float64(-0.6904210483822921), np.float64(-0.6904210483822921)],
        [np.float64(0.6904210483822921), np.float64(0.21595729184584922), np.float64(0.6904210483822921)],
        [np.float64(0.6904210483822921), np.float64(-0.21595729184584922), np.float64(0.6904210483822921)],
        [np.float64(0.6904210483822921), np.float64(0.21595729184584922), np.float64(-0.6904210483822921)],
        [np.float64(0.6904210483822921), np.float64(-0.21595729184584922), np.float64(-0.6904210483822921)],
        [np.float64(-0.6904210483822921), np.float64(0.21595729184584922), np.float64(0.6904210483822921)],
        [np.float64(-0.6904210483822921), np.float64(-0.21595729184584922), np.float64(0.6904210483822921)],
        [np.float64(-0.6904210483822921), np.float64(0.21595729184584922), np.float64(-0.6904210483822921)],
        [np.float64(-0.6904210483822921), np.float64(-0.21595729184584922), np.float64(-0.6904210483822921)],
        [np.float64(0.6904210483822921), np.float64(0.6904210483822921), np.float64(0.21595729184584922)],
        [np.float64(0.6904210483822921), np.float64(0.6904210483822921), np.float64(-0.21595729184584922)],
        [np.float64(0.6904210483822921), np.float64(-0.6904210483822921), np.float64(0.21595729184584922)],
        [np.float64(0.6904210483822921), np.float64(-0.6904210483822921), np.float64(-0.21595729184584922)],
        [np.float64(-0.6904210483822921), np.float64(0.6904210483822921), np.float64(0.21595729184584922)],
        [np.float64(-0.6904210483822921), np.float64(0.6904210483822921), np.float64(-0.21595729184584922)],
        [np.float64(-0.6904210483822921), np.float64(-0.6904210483822921), np.float64(0.21595729184584922)],
        [np.float64(-0.6904210483822921), np.float64(-0.6904210483822921), np.float64(-0.21595729184584922)],
        [np.float64(0.8287699812525923), np.float64(0.3956894730559419), np.float64(0.3956894730559419)],
        [np.float64(-0.8287699812525923), np.float64(0.3956894730559419), np.float64(0.3956894730559419)],
        [np.float64(0.8287699812525923), np.float64(0.3956894730559419), np.float64(-0.3956894730559419)],
        [np.float64(-0.8287699812525923), np.float64(0.3956894730559419), np.float64(-0.3956894730559419)],
        [np.float64(0.8287699812525923), np.float64(-0.3956894730559419), np.float64(0.3956894730559419)],
        [np.float64(-0.8287699812525923), np.float64(-0.3956894730559419), np.float64(0.3956894730559419)],
        [np.float64(0.8287699812525923), np.float64(-0.3956894730559419), np.float64(-0.3956894730559419)],
        [np.float64(-0.8287699812525923), np.float64(-0.3956894730559419), np.float64(-0.3956894730559419)],
        [np.float64(0.3956894730559419), np.float64(0.8287699812525923), np.float64(0.3956894730559419)],
        [np.float64(0.3956894730559419), np.float64(-0.8287699812525923), np.float64(0.3956894730559419)],
        [np.float64(0.3956894730559419), np.float64(0.8287699812525923), np.float64(-0.3956894730559419)],
        [np.float64(0.3956894730559419), np.float64(-0.8287699812525923), np.float64(-0.3956894730559419)],
        [np.float64(-0.3956894730559419), np.float64(0.8287699812525923), np.float64(0.3956894730559419)],
        [np.float64(-0.3956894730559419), np.float64(-0.8287699812525923), np.float64(0.3956894730559419)],
        [np.float64(-0.3956894730559419), np.float64(0.8287699812525923), np.float64(-0.3956894730559419)],
        [np.float64(-0.3956894730559419), np.float64(-0.8287699812525923), np.float64(-0.3956894730559419)],
        [np.float64(0.3956894730559419), np.float64(0.3956894730559419), np.float64(0.8287699812525923)],
        [np.float64(0.3956894730559419), np.float64(0.3956894730559419), np.float64(-0.8287699812525923)],
        [np.float64(0.3956894730559419), np.float64(-0.3956894730559419), np.float64(0.8287699812525923)],
        [np.float64(0.3956894730559419), np.float64(-0.3956894730559419), np.float64(-0.8287699812525923)],
        [np.float64(-0.3956894730559419), np.float64(0.3956894730559419), np.float64(0.8287699812525923)],
        [np.float64(-0.3956894730559419), np.float64(0.3956894730559419), np.float64(-0.8287699812525923)],
        [np.float64(-0.3956894730559419), np.float64(-0.3956894730559419), np.float64(0.8287699812525923)],
        [np.float64(-0.3956894730559419), np.float64(-0.3956894730559419), np.float64(-0.8287699812525923)],
        [np.float64(0.0), np.float64(0.4783690288121502), np.float64(0.8781589106040661)],
        [np.float64(0.0), np.float64(0.4783690288121502), np.float64(-0.8781589106040661)],
        [np.float64(0.0), np.float64(-0.4783690288121502), np.float64(0.8781589106040661)],
        [np.float64(0.0), np.float64(-0.4783690288121502), np.float64(-0.8781589106040661)],
        [np.float64(0.4783690288121502), np.float64(0.0), np.float64(0.8781589106040661)],
        [np.float64(0.4783690288121502), np.float64(0.0), np.float64(-0.8781589106040661)],
        [np.float64(-0.4783690288121502), np.float64(0.0), np.float64(0.8781589106040661)],
        [np.float64(-0.4783690288121502), np.float64(0.0), np.float64(-0.8781589106040661)],
        [np.float64(0.4783690288121502), np.float64(0.8781589106040661), np.float64(0.0)],
        [np.float64(0.4783690288121502), np.float64(-0.8781589106040661), np.float64(0.0)],
        [np.float64(-0.4783690288121502), np.float64(0.8781589106040661), np.float64(0.0)],
        [np.float64(-0.4783690288121502), np.float64(-0.8781589106040661), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.8781589106040661), np.float64(0.4783690288121502)],
        [np.float64(0.0), np.float64(0.8781589106040661), np.float64(-0.4783690288121502)],
        [np.float64(0.0), np.float64(-0.8781589106040661), np.float64(0.4783690288121502)],
        [np.float64(0.0), np.float64(-0.8781589106040661), np.float64(-0.4783690288121502)],
        [np.float64(0.8781589106040661), np.float64(0.0), np.float64(0.4783690288121502)],
        [np.float64(0.8781589106040661), np.float64(0.0), np.float64(-0.4783690288121502)],
        [np.float64(-0.8781589106040661), np.float64(0.0), np.float64(0.4783690288121502)],
        [np.float64(-0.8781589106040661), np.float64(0.0), np.float64(-0.4783690288121502)],
        [np.float64(0.8781589106040661), np.float64(0.4783690288121502), np.float64(0.0)],
        [np.float64(0.8781589106040661), np.float64(-0.4783690288121502), np.float64(0.0)],
        [np.float64(-0.8781589106040661), np.float64(0.4783690288121502), np.float64(0.0)],
        [np.float64(-0.8781589106040661), np.float64(-0.4783690288121502), np.float64(0.0)],
    ]), np.array([
        np.float64(0.003828270494937149),
        np.float64(0.003828270494937149),
        np.float64(0.003828270494937149),
        np.float64(0.003828270494937149),
        np.float64(0.003828270494937149),
        np.float64(0.003828270494937149),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.009793737512487511),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.00821173728319111),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009942814891178094),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009595471336070959),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
        np.float64(0.009694996361663025),
    ])),
    146: (19, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.2912988822095268), np.float64(0.6764410400114264), np.float64(0.6764410400114264)],
        [np.float64(-0.2912988822095268), np.float64(0.6764410400114264), np.float64(0.6764410400114264)],
        [np.float64(0.2912988822095268), np.float64(0.6764410400114264), np.float64(-0.6764410400114264)],
        [np.float64(-0.2912988822095268), np.float64(0.6764410400114264), np.float64(-0.6764410400114264)],
        [np.float64(0.2912988822095268), np.float64(-0.6764410400114264), np.float64(0.6764410400114264)],
        [np.float64(-0.2912988822095268), np.float64(-0.6764410400114264), np.float64(0.6764410400114264)],
        [np.float64(0.2912988822095268), np.float64(-0.6764410400114264), np.float64(-0.6764410400114264)],
        [np.float64(-0.2912988822095268), np.float64(-0.6764410400114264), np.float64(-0.6764410400114264)],
        [np.float64(0.6764410400114264), np.float64(0.2912988822095268), np.float64(0.6764410400114264)],
        [np.float64(0.6764410400114264), np.float64(-0.2912988822095268), np.float64(0.6764410400114264)],
        [np.float64(0.6764410400114264), np.float64(0.2912988822095268), np.float64(-0.6764410400114264)],
        [np.float64(0.6764410400114264), np.float64(-0.2912988822095268), np.float64(-0.6764410400114264)],
        [np.float64(-0.6764410400114264), np.float64(0.2912988822095268), np.float64(0.6764410400114264)],
        [np.float64(-0.6764410400114264), np.float64(-0.2912988822095268), np.float64(0.6764410400114264)],
        [np.float64(-0.6764410400114264), np.float64(0.2912988822095268), np.float64(-0.6764410400114264)],
        [np.float64(-0.6764410400114264), np.float64(-0.2912988822095268), np.float64(-0.6764410400114264)],
        [np.float64(0.6764410400114264), np.float64(0.6764410400114264), np.float64(0.2912988822095268)],
        [np.float64(0.6764410400114264), np.float64(0.6764410400114264), np.float64(-0.2912988822095268)],
        [np.float64(0.6764410400114264), np.float64(-0.6764410400114264), np.float64(0.2912988822095268)],
        [np.float64(0.6764410400114264), np.float64(-0.6764410400114264), np.float64(-0.2912988822095268)],
        [np.float64(-0.6764410400114264), np.float64(0.6764410400114264), np.float64(0.2912988822095268)],
        [np.float64(-0.6764410400114264), np.float64(0.6764410400114264), np.float64(-0.2912988822095268)],
        [np.float64(-0.6764410400114264), np.float64(-0.6764410400114264), np.float64(0.2912988822095268)],
        [np.float64(-0.6764410400114264), np.float64(-0.6764410400114264), np.float64(-0.2912988822095268)],
        [np.float64(0.8070898183595826), np.float64(0.4174961227965453), np.float64(0.4174961227965453)],
        [np.float64(-0.8070898183595826), np.float64(0.4174961227965453), np.float64(0.4174961227965453)],
        [np.float64(0.8070898183595826), np.float64(0.4174961227965453), np.float64(-0.4174961227965453)],
        [np.float64(-0.8070898183595826), np.float64(0.4174961227965453), np.float64(-0.4174961227965453)],
        [np.float64(0.8070898183595826), np.float64(-0.4174961227965453), np.float64(0.4174961227965453)],
        [np.float64(-0.8070898183595826), np.float64(-0.4174961227965453), np.float64(0.4174961227965453)],
        [np.float64(0.8070898183595826), np.float64(-0.4174961227965453), np.float64(-0.4174961227965453)],
        [np.float64(-0.8070898183595826), np.float64(-0.4174961227965453), np.float64(-0.4174961227965453)],
        [np.float64(0.4174961227965453), np.float64(0.8070898183595826), np.float64(0.4174961227965453)],
        [np.float64(0.4174961227965453), np.float64(-0.8070898183595826), np.float64(0.4174961227965453)],
        [np.float64(0.4174961227965453), np.float64(0.8070898183595826), np.float64(-0.4174961227965453)],
        [np.float64(0.4174961227965453), np.float64(-0.8070898183595826), np.float64(-0.4174961227965453)],
        [np.float64(-0.4174961227965453), np.float64(0.8070898183595826), np.float64(0.4174961227965453)],
        [np.float64(-0.4174961227965453), np.float64(-0.8070898183595826), np.float64(0.4174961227965453)],
        [np.float64(-0.4174961227965453), np.float64(0.8070898183595826), np.float64(-0.4174961227965453)],
        [np.float64(-0.4174961227965453), np.float64(-0.8070898183595826), np.float64(-0.4174961227965453)],
        [np.float64(0.4174961227965453), np.float64(0.4174961227965453), np.float64(0.8070898183595826)],
        [np.float64(0.4174961227965453), np.float64(0.4174961227965453), np.float64(-0.8070898183595826)],
        [np.float64(0.4174961227965453), np.float64(-0.4174961227965453), np.float64(0.8070898183595826)],
        [np.float64(0.4174961227965453), np.float64(-0.4174961227965453), np.float64(-0.8070898183595826)],
        [np.float64(-0.4174961227965453), np.float64(0.4174961227965453), np.float64(0.8070898183595826)],
        [np.float64(-0.4174961227965453), np.float64(0.4174961227965453), np.float64(-0.8070898183595826)],
        [np.float64(-0.4174961227965453), np.float64(-0.4174961227965453), np.float64(0.8070898183595826)],
        [np.float64(-0.4174961227965453), np.float64(-0.4174961227965453), np.float64(-0.8070898183595826)],
        [np.float64(0.9748886436771732), np.float64(0.15746766720390812), np.float64(0.15746766720390812)],
        [np.float64(-0.9748886436771732), np.float64(0.15746766720390812), np.float64(0.15746766720390812)],
        [np.float64(0.9748886436771732), np.float64(0.15746766720390812), np.float64(-0.15746766720390812)],
        [np.float64(-0.9748886436771732), np.float64(0.15746766720390812), np.float64(-0.15746766720390812)],
        [np.float64(0.9748886436771732), np.float64(-0.15746766720390812), np.float64(0.15746766720390812)],
        [np.float64(-0.9748886436771732), np.float64(-0.15746766720390812), np.float64(0.15746766720390812)],
        [np.float64(0.9748886436771732), np.float64(-0.15746766720390812), np.float64(-0.15746766720390812)],
        [np.float64(-0.9748886436771732), np.float64(-0.15746766720390812), np.float64(-0.15746766720390812)],
        [np.float64(0.15746766720390812), np.float64(0.9748886436771732), np.float64(0.15746766720390812)],
        [np.float64(0.15746766720390812), np.float64(-0.9748886436771732), np.float64(0.15746766720390812)],
        [np.float64(0.15746766720390812), np.float64(0.9748886436771732), np.float64(-0.15746766720390812)],
        [np.float64(0.15746766720390812), np.float64(-0.9748886436771732), np.float64(-0.15746766720390812)],
        [np.float64(-0.15746766720390812), np.float64(0.9748886436771732), np.float64(0.15746766720390812)],
        [np.float64(-0.15746766720390812), np.float64(-0.9748886436771732), np.float64(0.15746766720390812)],
        [np.float64(-0.15746766720390812), np.float64(0.9748886436771732), np.float64(-0.15746766720390812)],
        [np.float64(-0.15746766720390812), np.float64(-0.9748886436771732), np.float64(-0.15746766720390812)],
        [np.float64(0.15746766720390812), np.float64(0.15746766720390812), np.float64(0.9748886436771732)],
        [np.float64(0.15746766720390812), np.float64(0.15746766720390812), np.float64(-0.9748886436771732)],
        [np.float64(0.15746766720390812), np.float64(-0.15746766720390812), np.float64(0.9748886436771732)],
        [np.float64(0.15746766720390812), np.float64(-0.15746766720390812), np.float64(-0.9748886436771732)],
        [np.float64(-0.15746766720390812), np.float64(0.15746766720390812), np.float64(0.9748886436771732)],
        [np.float64(-0.15746766720390812), np.float64(0.15746766720390812), np.float64(-0.9748886436771732)],
        [np.float64(-0.15746766720390812), np.float64(-0.15746766720390812), np.float64(0.9748886436771732)],
        [np.float64(-0.15746766720390812), np.float64(-0.15746766720390812), np.float64(-0.9748886436771732)],
        [np.float64(0.14035538117131835), np.float64(0.4493328323269558), np.float64(0.8822700112603226)],
        [np.float64(0.14035538117131835), np.float64(0.4493328323269558), np.float64(-0.8822700112603226)],
        [np.float64(0.14035538117131835), np.float64(-0.4493328323269558), np.float64(0.8822700112603226)],
        [np.float64(0.14035538117131835), np.float64(-0.4493328323269558), np.float64(-0.8822700112603226)],
        [np.float64(-0.14035538117131835), np.float64(0.4493328323269558), np.float64(0.8822700112603226)],
        [np.float64(-0.14035538117131835), np.float64(0.4493328323269558), np.float64(-0.8822700112603226)],
        [np.float64(-0.14035538117131835), np.float64(-0.4493328323269558), np.float64(0.8822700112603226)],
        [np.float64(-0.14035538117131835), np.float64(-0.4493328323269558), np.float64(-0.8822700112603226)],
        [np.float64(0.14035538117131835), np.float64(0.8822700112603226), np.float64(0.4493328323269558)],
        [np.float64(0.14035538117131835), np.float64(0.8822700112603226), np.float64(-0.4493328323269558)],
        [np.float64(0.14035538117131835), np.float64(-0.8822700112603226), np.float64(0.4493328323269558)],
        [np.float64(0.14035538117131835), np.float64(-0.8822700112603226), np.float64(-0.4493328323269558)],
        [np.float64(-0.14035538117131835), np.float64(0.8822700112603226), np.float64(0.4493328323269558)],
        [np.float64(-0.14035538117131835), np.float64(0.8822700112603226), np.float64(-0.4493328323269558)],
        [np.float64(-0.14035538117131835), np.float64(-0.8822700112603226), np.float64(0.4493328323269558)],
        [np.float64(-0.14035538117131835), np.float64(-0.8822700112603226), np.float64(-0.4493328323269558)],
        [np.float64(0.4493328323269558), np.float64(0.14035538117131835), np.float64(0.8822700112603226)],
        [np.float64(0.4493328323269558), np.float64(0.14035538117131835), np.float64(-0.8822700112603226)],
        [np.float64(0.4493328323269558), np.float64(-0.14035538117131835), np.float64(0.8822700112603226)],
        [np.float64(0.4493328323269558), np.float64(-0.14035538117131835), np.float64(-0.8822700112603226)],
        [np.float64(-0.4493328323269558), np.float64(0.14035538117131835), np.float64(0.8822700112603226)],
        [np.float64(-0.4493328323269558), np.float64(0.14035538117131835), np.float64(-0.8822700112603226)],
        [np.float64(-0.4493328323269558), np.float64(-0.14035538117131835), np.float64(0.8822700112603226)],
        [np.float64(-0.4493328323269558), np.float64(-0.14035538117131835), np.float64(-0.8822700112603226)],
        [np.float64(0.4493328323269558), np.float64(0.8822700112603226), np.float64(0.14035538117131835)],
        [np.float64(0.4493328323269558), np.float64(0.8822700112603226), np.float64(-0.14035538117131835)],
        [np.float64(0.4493328323269558), np.float64(-0.8822700112603226), np.float64(0.14035538117131835)],
        [np.float64(0.4493328323269558), np.float64(-0.8822700112603226), np.float64(-0.14035538117131835)],
        [np.float64(-0.4493328323269558), np.float64(0.8822700112603226), np.float64(0.14035538117131835)],
        [np.float64(-0.4493328323269558), np.float64(0.8822700112603226), np.float64(-0.14035538117131835)],
        [np.float64(-0.4493328323269558), np.float64(-0.8822700112603226), np.float64(0.14035538117131835)],
        [np.float64(-0.4493328323269558), np.float64(-0.8822700112603226), np.float64(-0.14035538117131835)],
        [np.float64(0.8822700112603226), np.float64(0.14035538117131835), np.float64(0.4493328323269558)],
        [np.float64(0.8822700112603226), np.float64(0.14035538117131835), np.float64(-0.4493328323269558)],
        [np.float64(0.8822700112603226), np.float64(-0.14035538117131835), np.float64(0.4493328323269558)],
        [np.float64(0.8822700112603226), np.float64(-0.14035538117131835), np.float64(-0.4493328323269558)],
        [np.float64(-0.8822700112603226), np.float64(0.14035538117131835), np.float64(0.4493328323269558)],
        [np.float64(-0.8822700112603226), np.float64(0.14035538117131835), np.float64(-0.4493328323269558)],
        [np.float64(-0.8822700112603226), np.float64(-0.14035538117131835), np.float64(0.4493328323269558)],
        [np.float64(-0.8822700112603226), np.float64(-0.14035538117131835), np.float64(-0.4493328323269558)],
        [np.float64(0.8822700112603226), np.float64(0.4493328323269558), np.float64(0.14035538117131835)],
        [np.float64(0.8822700112603226), np.float64(0.4493328323269558), np.float64(-0.14035538117131835)],
        [np.float64(0.8822700112603226), np.float64(-0.4493328323269558), np.float64(0.14035538117131835)],
        [np.float64(0.8822700112603226), np.float64(-0.4493328323269558), np.float64(-0.14035538117131835)],
        [np.float64(-0.8822700112603226), np.float64(0.4493328323269558), np.float64(0.14035538117131835)],
        [np.float64(-0.8822700112603226), np.float64(0.4493328323269558), np.float64(-0.14035538117131835)],
        [np.float64(-0.8822700112603226), np.float64(-0.4493328323269558), np.float64(0.14035538117131835)],
        [np.float64(-0.8822700112603226), np.float64(-0.4493328323269558), np.float64(-0.14035538117131835)],
    ]), np.array([
        np.float64(0.0005996313688621422),
        np.float64(0.0005996313688621422),
        np.float64(0.0005996313688621422),
        np.float64(0.0005996313688621422),
        np.float64(0.0005996313688621422),
        np.float64(0.0005996313688621422),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.007372999718620751),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.00721051536014448),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.007116355493117551),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.006753829486314482),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.007574394159054034),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
        np.float64(0.006991087353303263),
    ])),
    194: (23, np.array([
        [np.float64(1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(-1.0), np.float64(0.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(-1.0), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(1.0)],
        [np.float64(0.0), np.float64(0.0), np.float64(-1.0)],
        [np.float64(0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(0.7071067811865475), np.float64(0.0)],
        [np.float64(-0.7071067811865475), np.float64(-0.7071067811865475), np.float64(0.0)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(0.7071067811865475)],
        [np.float64(-0.7071067811865475), np.float64(0.0), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(0.7071067811865475)],
        [np.float64(0.0), np.float64(-0.7071067811865475), np.float64(-0.7071067811865475)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(0.5773502691896258)],
        [np.float64(-0.5773502691896258), np.float64(-0.5773502691896258), np.float64(-0.5773502691896258)],
        [np.float64(0.3141969941825863), np.float64(0.6712973442695226), np.float64(0.6712973442695226)],
        [np.float64(-0.3141969941825863), np.float64(0.6712973442695226), np.float64(0.6712973442695226)],
        [np.float64(0.3141969941825863), np.float64(0.6712973442695226), np.float64(-0.6712973442695226)],
        [np.float64(-0.3141969941825863), np.float64(0.6712973442695226), np.float64(-0.6712973442695226)],
        [np.float64(0.3141969941825863), np.float64(-0.6712973442695226), np.float64(0.6712973442695226)],
        [np.float64(-0.3141969941825863), np.float64(-0.6712973442695226), np.float64(0.6712973442695226)],
        [np.float64(0.3141969941825863), np.float64(-0.6712973442695226), np.float64(-0.6712973442695226)],
        [np.float64(-0.3141969941825863), np.float64(-0.6712973442695226), np.float64(-0.6712973442695226)],
        [np.float64(0.6712973442695226), np.float64(0.3141969941825863), np.float64(0.6712973442695226)],
        [np.float64(0.6712973442695226), np.float64(-0.3141969941825863), np.float64(0.6712973442695226)],
        [np.float64(0.6712973442695226), np.float64(0.3141969941825863), np.float64(-0.6712973442695226)],
        [np.float64(0.6712973442695226), np.float64(-0.3141969941825863), np.float64(-0.6712973442695226)],
        [np.float64(-0.6712973442695226), np.float64(0.3141969941825863), np.float64(0.6712973442695226)],
        [np.float64(-0.6712973442695226), np.float64(-0.3141969941825863), np.float64(0.6712973442695226)],
        [np.float64(-0.6712973442695226), np.float64(0.3141969941825863), np.float64(-0.6712973442695226)],
        [np.float64(-0.6712973442695226), np.float64(-0.3141969941825863), np.float64(-0.6712973442695226)],
        [np.float64(0.6712973442695226), np.float64(0.6712973442695226), np.float64(0.3141969941825863)],
        [np.float64(0.6712973442695226), np.float64(0.6712973442695226), np.float64(-0.3141969941825863)],
        [np.float64(0.6712973442695226), np.float64(-0.6712973442695226), np.float64(0.3141969941825863)],
        [np.float64(0.6712973442695226), np.float64(-0.6712973442695226), np.float64(-0.3141969941825863)],
        [np.float64(-0.6712973442695226), np.float64(0.6712973442695226), np.float64(0.3141969941825863)],
        [np.float64(-0.6712973442695226), np.float64(0.6712973442695226), np.float64(-0.3141969941825863)],
        [np.float64(-0.6712973442695226), np.float64(-0.6712973442695226), np.float64(0.3141969941825863)],
        [np.float64(-0.6712973442695226), np.float64(-0.6712973442695226), np.float64(-0.3141969941825863)],
        [np.float64(0.912509096867474), np.float64(0.28924656275754346), np.float64(0.28924656275754346)],
        [np.float64(-0.912509096867474), np.float64(0.28924656275754346), np.float64(0.28924656275754346)],
        [np.float64(0.912509096867474), np.float64(0.28924656275754346), np.float64(-0.28924656275754346)],
        [np.float64(-0.912509096867474), np.float64(0.28924656275754346), np.float64(-0.28924656275754346)],
        [np.float64(0.912509096867474), np.float64(-0.28924656275754346), np.float64(0.28924656275754346)],
        [np.float64(-0.912509096867474), np.float64(-0.28924656275754346), np.float64(0.28924656275754346)],
        [np.float64(0.912509096867474), np.float64(-0.28924656275754346), np.float64(-0.28924656275754346)],
        [np.float64(-0.912509096867474), np.float64(-0.28924656275754346), np.float64(-0.28924656275754346)],
        [np.float64(0.28924656275754346), np.float64(0.912509096867474), np.float64(0.28924656275754346)],
        [np.float64(0.28924656275754346), np.float64(-0.912509096867474), np.float64(0.28924656275754346)],
        [np.float64(0.28924656275754346), np.float64(0.912509096867474), np.float64(-0.28924656275754346)],
        [np.float64(0.28924656275754346), np.float64(-0.912509096867474), np.float64(-0.28924656275754346)],
        [np.float64(-0.28924656275754346), np.float64(0.912509096867474), np.float64(0.28924656275754346)],
        [np.float64(-0.28924656275754346), np.float64(-0.912509096867474), np.float64(0.28924656275754346)],
        [np.float64(-0.28924656275754346), np.float64(0.912509096867474), np.float64(-0.28924656275754346)],
        [np.float64(-0.28924656275754346), np.float64(-0.912509096867474), np.float64(-0.28924656275754346)],
        [np.float64(0.28924656275754346), np.float64(0.28924656275754346), np.float64(0.912509096867474)],
        [np.float64(0.28924656275754346), np.float64(0.28924656275754346), np.float64(-0.912509096867474)],
        [np.float64(0.28924656275754346), np.float64(-0.28924656275754346), np.float64(0.912509096867474)],
        [np.float64(0.28924656275754346), np.float64(-0.28924656275754346), np.float64(-0.912509096867474)],
        [np.float64(-0.28924656275754346), np.float64(0.28924656275754346), np.float64(0.912509096867474)],
        [np.float64(-0.28924656275754346), np.float64(0.28924656275754346), np.float64(-0.912509096867474)],
        [np.float64(-0.28924656275754346), np.float64(-0.28924656275754346), np.float64(0.912509096867474)],
        [np.float64(-0.28924656275754346), np.float64(-0.28924656275754346), np.float64(-0.912509096867474)],
        [np.float64(0.7774932193147674), np.float64(0.4446933178717435), np.float64(0.4446933178717435)],
        [np.float64(-0.7774932193147674), np.float64(0.4446933178717435), np.float64(0.4446933178717435)],
        [np.float64(0.7774932193147674), np.float64(0.4446933178717435), np.float64(-0.4446933178717435)],
        [np.float64(-0.7774932193147674), np.float64(0.4446933178717435), np.float64(-0.4446933178717435)],
        [np.float64(0.7774932193147674), np.float64(-0.4446933178717435), np.float64(0.4446933178717435)],
        [np.float64(-0.7774932193147674), np.float64(-0.4446933178717435), np.float64(0.4446933178717435)],
        [np.float64(0.7774932193147674), np.float64(-0.4446933178717435), np.float64(-0.4446933178717435)],
        [np.float64(-0.7774932193147674), np.float64(-0.4446933178717435), np.float64(-0.4446933178717435)],
        [np.float64(0.4446933178717435), np.float64(0.7774932193147674), np.float64(0.4446933178717435)],
        [np.float64(0.4446933178717435), np.float64(-0.7774932193147674), np.float64(0.4446933178717435)],
        [np.float64(0.4446933178717435), np.float64(0.7774932193147674), np.float64(-0.4446933178717435)],
        [np.float64(0.4446933178717435), np.float64(-0.7774932193147674), np.float64(-0.4446933178717435)],
        [np.float64(-0.4446933178717435), np.float64(0.7774932193147674), np.float64(0.4446933178717435)],
        [np.float64(-0.4446933178717435), np.float64(-0.7774932193147674), np.float64(0.4446933178717435)],
        [np.float64(-0.4446933178717435), np.float64(0.7774932193147674), np.float64(-0.4446933178717435)],
        [np.float64(-0.4446933178717435), np.float64(-0.7774932193147674), np.float64(-0.4446933178717435)],
        [np.float64(0.4446933178717435), np.float64(0.4446933178717435), np.float64(0.7774932193147674)],
        [np.float64(0.4446933178717435), np.float64(0.4446933178717435), np.float64(-0.7774932193147674)],
        [np.float64(0.4446933178717435), np.float64(-0.4446933178717435), np.float64(0.7774932193147674)],
        [np.float64(0.4446933178717435), np.float64(-0.4446933178717435), np.float64(-0.7774932193147674)],
        [np.float64(-0.4446933178717435), np.float64(0.4446933178717435), np.float64(0.7774932193147674)],
        [np.float64(-0.4446933178717435), np.float64(0.4446933178717435), np.float64(-0.7774932193147674)],
        [np.float64(-0.4446933178717435), np.float64(-0.4446933178717435), np.float64(0.7774932193147674)],
        [np.float64(-0.4446933178717435), np.float64(-0.4446933178717435), np.float64(-0.7774932193147674)],
        [np.float64(0.9829723027072534), np.float64(0.12993354476500604), np.float64(0.12993354476500604)],
        [np.float64(-0.9829723027072534), np.float64(0.12993354476500604), np.float64(0.12993354476500604)],
        [np.float64(0.9829723027072534), np.float64(0.12993354476500604), np.float64(-0.12993354476500604)],
        [np.float64(-0.9829723027072534), np.float64(0.12993354476500604), np.float64(-0.12993354476500604)],
        [np.float64(0.9829723027072534), np.float64(-0.12993354476500604), np.float64(0.12993354476500604)],
        [np.float64(-0.9829723027072534), np.float64(-0.12993354476500604), np.float64(0.12993354476500604)],
        [np.float64(0.9829723027072534), np.float64(-0.12993354476500604), np.float64(-0.12993354476500604)],
        [np.float64(-0.9829723027072534), np.float64(-0.12993354476500604), np.float64(-0.12993354476500604)],
        [np.float64(0.12993354476500604), np.float64(0.9829723027072534), np.float64(0.12993354476500604)],
        [np.float64(0.12993354476500604), np.float64(-0.9829723027072534), np.float64(0.12993354476500604)],
        [np.float64(0.12993354476500604), np.float64(0.9829723027072534), np.float64(-0.12993354476500604)],
        [np.float64(0.12993354476500604), np.float64(-0.9829723027072534), np.float64(-0.12993354476500604)],
        [np.float64(-0.12993354476500604), np.float64(0.9829723027072534), np.float64(0.12993354476500604)],
        [np.float64(-0.12993354476500604), np.float64(-0.9829723027072534), np.float64(0.12993354476500604)],
        [np.float64(-0.12993354476500604), np.float64(0.9829723027072534), np.float64(-0.12993354476500604)],
        [np.float64(-0.12993354476500604), np.float64(-0.9829723027072534), np.float64(-0.12993354476500604)],
        [np.float64(0.12993354476500604), np.float64(0.12993354476500604), np.float64(0.9829723027072534)],
        [np.float64(0.12993354476500604), np.float64(0.12993354476500604), np.float64(-0.9829723027072534)],
        [np.float64(0.12993354476500604), np.float64(-0.12993354476500604), np.float64(0.9829723027072534)],
        [np.float64(0.12993354476500604), np.float64(-0.12993354476500604), np.float64(-0.9829723027072534)],
        [np.float64(-0.12993354476500604), np.float64(0.12993354476500604), np.float64(0.9829723027072534)],
        [np.float64(-0.12993354476500604), np.float64(0.12993354476500604), np.float64(-0.9829723027072534)],
        [np.float64(-0.12993354476500604), np.float64(-0.12993354476500604), np.float64(0.9829723027072534)],
        [np.float64(-0.12993354476500604), np.float64(-0.12993354476500604), np.float64(-0.9829723027072534)],
        [np.float64(0.0), np.float64(0.3457702197611282), np.float64(0.9383192181375916)],
        [np.float64(0.0), np.float64(0.3457702197611282), np.float64(-0.9383192181375916)],
        [np.float64(0.0), np.float64(-0.3457702197611282), np.float64(0.9383192181375916)],
        [np.float64(0.0), np.float64(-0.3457702197611282), np.float64(-0.9383192181375916)],
        [np.float64(0.3457702197611282), np.float64(0.0), np.float64(0.9383192181375916)],
        [np.float64(0.3457702197611282), np.float64(0.0), np.float64(-0.9383192181375916)],
        [np.float64(-0.3457702197611282), np.float64(0.0), np.float64(0.9383192181375916)],
        [np.float64(-0.3457702197611282), np.float64(0.0), np.float64(-0.9383192181375916)],
        [np.float64(0.3457702197611282), np.float64(0.9383192181375916), np.float64(0.0)],
        [np.float64(0.3457702197611282), np.float64(-0.9383192181375916), np.float64(0.0)],
        [np.float64(-0.3457702197611282), np.float64(0.9383192181375916), np.float64(0.0)],
        [np.float64(-0.3457702197611282), np.float64(-0.9383192181375916), np.float64(0.0)],
        [np.float64(0.0), np.float64(0.9383192181375916), np.float64(0.3457702197611282)],
        [np.float64(0.0), np.float64(0.9383192181375916), np.float64(-0.3457702197611282)],
        [np.float64(0.0), np.float64(-0.9383192181375916), np.float64(0.3457702197611282)],
        [np.float64(0.0), np.float64(-0.9383192181375916), np.float64(-0.3457702197611282)],
        [np.float64(0.9383192181375916), np.float64(0.0), np.float64(0.3457702197611282)],
        [np.float64(0.9383192181375916), np.float64(0.0), np.float64(-0.3457702197611282)],
        [np.float64(-0.9383192181375916), np.float64(0.0), np.float64(0.3457702197611282)],
        [np.float64(-0.9383192181375916), np.float64(0.0), np.float64(-0.3457702197611282)],
        [np.float64(0.9383192181375916), np.float64(0.3457702197611282), np.float64(0.0)],
        [np.float64(0.9383192181375916), np.float64(-0.3457702197611282), np.float64(0.0)],
        [np.float64(-0.9383192181375916), np.float64(0.3457702197611282), np.float64(0.0)],
        [np.float64(-0.9383192181375916), np.float64(-0.3457702197611282), np.float64(0.0)],
        [np.float64(0.15904171053835295), np.float64(0.8360360154824589), np.float64(0.525118572443642)],
        [np.float64(0.15904171053835295), np.float64(0.8360360154824589), np.float64(-0.525118572443642)],
        [np.float64(0.15904171053835295), np.float64(-0.8360360154824589), np.float64(0.525118572443642)],
        [np.float64(0.15904171053835295), np.float64(-0.8360360154824589), np.float64(-0.525118572443642)],
        [np.float64(-0.15904171053835295), np.float64(0.8360360154824589), np.float64(0.525118572443642)],
        [np.float64(-0.15904171053835295), np.float64(0.8360360154824589), np.float64(-0.525118572443642)],
        [np.float64(-0.15904171053835295), np.float64(-0.8360360154824589), np.float64(0.525118572443642)],
        [np.float64(-0.15904171053835295), np.float64(-0.8360360154824589), np.float64(-0.525118572443642)],
        [np.float64(0.15904171053835295), np.float64(0.525118572443642), np.float64(0.8360360154824589)],
        [np.float64(0.15904171053835295), np.float64(0.525118572443642), np.float64(-0.8360360154824589)],
        [np.float64(0.15904171053835295), np.float64(-0.525118572443642), np.float64(0.8360360154824589)],
        [np.float64(0.15904171053835295), np.float64(-0.525118572443642), np.float64(-0.8360360154824589)],
        [np.float64(-0.15904171053835295), np.float64(0.525118572443642), np.float64(0.8360360154824589)],
        [np.float64(-0.15904171053835295), np.float64(0.525118572443642), np.float64(-0.8360360154824589)],
        [np.float64(-0.15904171053835295), np.float64(-0.525118572443642), np.float64(0.8360360154824589)],
        [np.float64(-0.15904171053835295), np.float64(-0.525118572443642), np.float64(-0.8360360154824589)],
        [np.float64(0.8360360154824589), np.float64(0.15904171053835295), np.float64(0.525118572443642)],
        [np.float64(0.8360360154824589), np.float64(0.15904171053835295), np.float64(-0.525118572443642)],
        [np.float64(0.8360360154824589), np.float64(-0.15904171053835295), np.float64(0.525118572443642)],
        [np.float64(0.8360360154824589), np.float64(-0.15904171053835295), np.float64(-0.525118572443642)],
        [np.float64(-0.8360360154824589), np.float64(0.15904171053835295), np.float64(0.525118572443642)],
        [np.float64(-0.8360360154824589), np.float64(0.15904171053835295), np.float64(-0.525118572443642)],
        [np.float64(-0.8360360154824589), np.float64(-0.15904171053835295), np.float64(0.525118572443642)],
        [np.float64(-0.8360360154824589), np.float64(-0.15904171053835295), np.float64(-0.525118572443642)],
        [np.float64(0.8360360154824589), np.float64(0.525118572443642), np.float64(0.15904171053835295)],
        [np.float64(0.8360360154824589), np.float64(0.525118572443642), np.float64(-0.15904171053835295)],
        [np.float64(0.8360360154824589), np.float64(-0.525118572443642), np.float64(0.15904171053835295)],
        [np.float64(0.8360360154824589), np.float64(-0.525118572443642), np.float64(-0.15904171053835295)],
        [np.float64(-0.8360360154824589), np.float64(0.525118572443642), np.float64(0.15904171053835295)],
        [np.float64(-0.8360360154824589), np.float64(0.525118572443642), np.float64(-0.15904171053835295)],
        [np.float64(-0.8360360154824589), np.float64(-0.525118572443642), np.float64(0.15904171053835295)],
        [np.float64(-0.8360360154824589), np.float64(-0.525118572443642), np.float64(-0.15904171053835295)],
        [np.float64(0.525118572443642), np.float64(0.15904171053835295), np.float64(0.8360360154824589)],
        [np.float64(0.525118572443642), np.float64(0.15904171053835295), np.float64(-0.8360360154824589)],
        [np.float64(0.525118572443642), np.float64(-0.15904171053835295), np.float64(0.8360360154824589)],
        [np.float64(0.525118572443642), np.float64(-0.15904171053835295), np.float64(-0.8360360154824589)],
        [np.float64(-0.525118572443642), np.float64(0.15904171053835295), np.float64(0.8360360154824589)],
        [np.float64(-0.525118572443642), np.float64(0.15904171053835295), np.float64(-0.8360360154824589)],
        [np.float64(-0.525118572443642), np.float64(-0.15904171053835295), np.float64(0.8360360154824589)],
        [np.float64(-0.525118572443642), np.float64(-0.15904171053835295), np.float64(-0.8360360154824589)],
        [np.float64(0.525118572443642), np.float64(0.8360360154824589), np.float64(0.15904171053835295)],
        [np.float64(0.525118572443642), np.float64(0.8360360154824589), np.float64(-0.15904171053835295)],
        [np.float64(0.525118572443642), np.float64(-0.8360360154824589), np.float64(0.15904171053835295)],
        [np.float64(0.525118572443642), np.float64(-0.8360360154824589), np.float64(-0.15904171053835295)],
        [np.float64(-0.525118572443642), np.float64(0.8360360154824589), np.float64(0.15904171053835295)],
        [np.float64(-0.525118572443642), np.float64(0.8360360154824589), np.float64(-0.15904171053835295)],
        [np.float64(-0.525118572443642), np.float64(-0.8360360154824589), np.float64(0.15904171053835295)],
        [np.float64(-0.525118572443642), np.float64(-0.8360360154824589), np.float64(-0.15904171053835295)],
    ]), np.array([
        np.float64(0.0017823404472445386),
        np.float64(0.0017823404472445386),
        np.float64(0.0017823404472445386),
        np.float64(0.0017823404472445386),
        np.float64(0.0017823404472445386),
        np.float64(0.0017823404472445386),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.005716905949977094),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.0055733831788487434),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005608704082587991),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005158237711805388),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.005518771467273616),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.004106777028169402),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005051846064614805),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
        np.float64(0.005530248916233091),
    ])),
}
