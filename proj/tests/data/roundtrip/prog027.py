def f1(p2, p3):
    t4 = -p3
    t5 = [(t4 + p3), (2 + p2)][0]
    t6 = ((p2 + p3) + 3)
    return eval(input()) + eval(input())
print(2)
l7 = [eval(input()), (6 if True else 10), f1(2, 19), 8 + 6]
v8 = (eval(input()) + 9 + 6)
l7[0] = v8
print((v8 + v8) + 2)
print(v8)
