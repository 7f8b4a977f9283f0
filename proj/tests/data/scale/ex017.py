x = {0: 2, 1: 7, 2: 5}
y = eval(input())
x[y] = x[y] + 1
print(x[0] + x[1] + x[2])
print(x)
print(x[y] if x[y] != 1 else -1)
