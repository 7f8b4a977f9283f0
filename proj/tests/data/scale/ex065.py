y = {0: 7, 1: 3, 2: 3}
x = eval(input())
y[x] = y[x] + 1
print(y[0] + y[1] + y[2])
print(y)
print(y[x] if y[x] != 1 else -1)
