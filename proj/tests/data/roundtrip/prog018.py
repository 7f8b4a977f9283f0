def f1(p2, p3, p4):
    t5 = (eval(input()) if p3 != 2 else p2 + 10)
    return (t5 + p4) + (16 + p3)
b6 = 10 != 14 and (True)
v7 = ((19 + 13) + [2, 7][1])
b8 = eval(input()) == eval(input())
v9 = eval(input())
print(eval(input()))
v10 = (v9 + -v9)
v11 = v7
d12 = {7: (v11 + 7)}
b13 = True
print(-(d12[7]))
