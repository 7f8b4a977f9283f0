n = eval(input())
b = [n, n + 1, n + 2]
b[0] = b[1] + b[2]
print(b)
print(b[0] + b[1] + b[2])
print(-b[0])
print(b[1] == n + 1)
